"""Tournaments and simple graphs as immutable bit-coded values.

A tournament on n vertices stores one orientation bit per unordered pair
{i, j} with i < j, packed into an int in row-major upper-triangle order
(bit 1 means the arc i -> j).  A simple graph uses the same packing with
bit 1 meaning the edge {i, j} is present.  The packing makes inverting a
vertex set a single XOR with a precomputed pair mask, and it doubles as
the external text format ``T<n>:<bits>`` / ``G<n>:<bits>``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import ParseError

VertexSet = frozenset[int]
InversionSequence = tuple[VertexSet, ...]


def npairs(n: int) -> int:
    """Number of unordered pairs on n vertices."""
    return n * (n - 1) // 2


def pair_index(n: int, i: int, j: int) -> int:
    """Bit position of the pair {i, j}, i < j, in the packed code."""
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def vertex_pairs(n: int) -> Iterator[tuple[int, int]]:
    """All pairs (i, j), i < j, in bit-position order."""
    return itertools.combinations(range(n), 2)


def _check_order(n: int) -> None:
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")


def _check_bits(n: int, bits: int) -> None:
    if bits < 0 or bits >> npairs(n):
        raise ValueError(f"bit code {bits} out of range for order {n}")


def check_vertex_set(n: int, x: Iterable[int]) -> VertexSet:
    """Validate x as a subset of {0, ..., n-1} and freeze it."""
    xs = frozenset(x)
    for v in xs:
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range for order {n}")
    return xs


def subset_pair_mask(n: int, x: Iterable[int]) -> int:
    """Bitmask of all pairs with both endpoints in x."""
    mask = 0
    for i, j in itertools.combinations(sorted(set(x)), 2):
        mask |= 1 << pair_index(n, i, j)
    return mask


@dataclass(frozen=True)
class Tournament:
    """Orientation of the complete graph on vertices 0..n-1."""

    n: int
    bits: int

    def __post_init__(self):
        _check_order(self.n)
        _check_bits(self.n, self.bits)

    def has_arc(self, x: int, y: int) -> bool:
        """True iff the arc x -> y is present (x != y)."""
        if x < y:
            return bool(self.bits >> pair_index(self.n, x, y) & 1)
        return not self.bits >> pair_index(self.n, y, x) & 1

    def out_degree(self, x: int) -> int:
        return sum(1 for y in range(self.n) if y != x and self.has_arc(x, y))

    def out_degrees(self) -> list[int]:
        return [self.out_degree(x) for x in range(self.n)]

    def arcs(self) -> Iterator[tuple[int, int]]:
        for i, j in vertex_pairs(self.n):
            yield (i, j) if self.bits >> pair_index(self.n, i, j) & 1 else (j, i)

    def to_code(self) -> str:
        return f"T{self.n}:" + _bits_to_field(self.n, self.bits)

    @classmethod
    def from_code(cls, text: str) -> "Tournament":
        kind, n, bits = _parse_code(text)
        if kind != "T":
            raise ParseError(f"expected tournament code 'T...', got {kind!r}", 0)
        return cls(n, bits)


@dataclass(frozen=True)
class SimpleGraph:
    """Irreflexive symmetric graph on vertices 0..n-1."""

    n: int
    bits: int

    def __post_init__(self):
        _check_order(self.n)
        _check_bits(self.n, self.bits)

    def has_edge(self, x: int, y: int) -> bool:
        if x == y:
            return False
        if x > y:
            x, y = y, x
        return bool(self.bits >> pair_index(self.n, x, y) & 1)

    def degree(self, x: int) -> int:
        return sum(1 for y in range(self.n) if self.has_edge(x, y))

    def edges(self) -> Iterator[tuple[int, int]]:
        for i, j in vertex_pairs(self.n):
            if self.bits >> pair_index(self.n, i, j) & 1:
                yield i, j

    def edge_count(self) -> int:
        return self.bits.bit_count()

    def to_code(self) -> str:
        return f"G{self.n}:" + _bits_to_field(self.n, self.bits)

    @classmethod
    def from_code(cls, text: str) -> "SimpleGraph":
        kind, n, bits = _parse_code(text)
        if kind != "G":
            raise ParseError(f"expected graph code 'G...', got {kind!r}", 0)
        return cls(n, bits)


@dataclass(frozen=True)
class AnnotatedTournament:
    """A tournament together with an inversion sequence over its vertices."""

    tournament: Tournament
    annotations: InversionSequence

    def __post_init__(self):
        for x in self.annotations:
            check_vertex_set(self.tournament.n, x)


def _bits_to_field(n: int, bits: int) -> str:
    return "".join("1" if bits >> p & 1 else "0" for p in range(npairs(n)))


def _parse_code(text: str) -> tuple[str, int, int]:
    if not text:
        raise ParseError("empty code", 0)
    kind = text[0]
    if kind not in ("T", "G"):
        raise ParseError(f"unknown code prefix {kind!r}", 0)
    colon = text.find(":")
    if colon < 0:
        raise ParseError("missing ':' separator", len(text))
    digits = text[1:colon]
    if not digits.isdigit():
        raise ParseError(f"bad order field {digits!r}", 1)
    n = int(digits)
    field = text[colon + 1:]
    expected = npairs(n)
    if len(field) != expected:
        raise ParseError(
            f"expected {expected} bits for order {n}, got {len(field)}",
            min(len(text), colon + 1 + expected),
        )
    bits = 0
    for p, ch in enumerate(field):
        if ch == "1":
            bits |= 1 << p
        elif ch != "0":
            raise ParseError(f"non-binary digit {ch!r}", colon + 1 + p)
    return kind, n, bits


def to_code(value: Union[Tournament, SimpleGraph]) -> str:
    return value.to_code()


def from_code(text: str) -> Union[Tournament, SimpleGraph]:
    """Parse either a tournament or a graph code, dispatching on the prefix."""
    kind, n, bits = _parse_code(text)
    return Tournament(n, bits) if kind == "T" else SimpleGraph(n, bits)


def invert(t: Tournament, x: Iterable[int]) -> Tournament:
    """Reverse every arc with both endpoints in x."""
    xs = check_vertex_set(t.n, x)
    return Tournament(t.n, t.bits ^ subset_pair_mask(t.n, xs))


def invert_seq(t: Tournament, seq: Iterable[Iterable[int]]) -> Tournament:
    """Apply the inversions of seq left to right.

    An arc ends up reversed iff it lies inside an odd number of the sets.
    """
    out = t
    for x in seq:
        out = invert(out, x)
    return out


def boolean_sum(t: Union[Tournament, SimpleGraph], u: Union[Tournament, SimpleGraph]) -> SimpleGraph:
    """Graph of the pairs on which t and u disagree."""
    if t.n != u.n:
        raise ValueError(f"order mismatch: {t.n} vs {u.n}")
    return SimpleGraph(t.n, t.bits ^ u.bits)


def flip_edges(t: Tournament, g: SimpleGraph) -> Tournament:
    """Reverse in t exactly the arcs lying on edges of g (t with g added mod 2)."""
    if t.n != g.n:
        raise ValueError(f"order mismatch: {t.n} vs {g.n}")
    return Tournament(t.n, t.bits ^ g.bits)


def dual(t: Tournament) -> Tournament:
    """Reverse every arc."""
    return Tournament(t.n, t.bits ^ ((1 << npairs(t.n)) - 1))


def is_acyclic(t: Tournament) -> bool:
    """True iff t is transitive.

    A tournament is transitive iff its out-degree sequence is a permutation
    of 0..n-1; ``has_three_cycle`` gives the equivalent direct test.
    """
    return sorted(t.out_degrees()) == list(range(t.n))


def has_three_cycle(t: Tournament) -> bool:
    """Exhaustive scan for a directed triangle."""
    for a, b, c in itertools.combinations(range(t.n), 3):
        ab, bc, ca = t.has_arc(a, b), t.has_arc(b, c), t.has_arc(c, a)
        if ab == bc == ca:
            return True
    return False


def restrict(t: Tournament, x: Iterable[int]) -> Tournament:
    """Subtournament induced on x, members relabeled 0..|x|-1 in numeric order."""
    xs = sorted(check_vertex_set(t.n, x))
    bits = 0
    for (a, b), (i, j) in zip(itertools.combinations(range(len(xs)), 2),
                              itertools.combinations(xs, 2)):
        if t.bits >> pair_index(t.n, i, j) & 1:
            bits |= 1 << pair_index(len(xs), a, b)
    return Tournament(len(xs), bits)


def delete_vertex(t: Tournament, v: int) -> Tournament:
    if not 0 <= v < t.n:
        raise ValueError(f"vertex {v} out of range for order {t.n}")
    return restrict(t, (u for u in range(t.n) if u != v))


def relabel(t: Tournament, perm: Iterable[int]) -> Tournament:
    """Rename vertex v to perm[v]; arcs follow."""
    p = list(perm)
    if sorted(p) != list(range(t.n)):
        raise ValueError(f"not a permutation of 0..{t.n - 1}: {p}")
    bits = 0
    for i, j in vertex_pairs(t.n):
        b = t.bits >> pair_index(t.n, i, j) & 1
        u, v = p[i], p[j]
        if u > v:
            u, v, b = v, u, 1 - b
        bits |= b << pair_index(t.n, u, v)
    return Tournament(t.n, bits)


def relabel_graph(g: SimpleGraph, perm: Iterable[int]) -> SimpleGraph:
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError(f"not a permutation of 0..{g.n - 1}: {p}")
    bits = 0
    for i, j in vertex_pairs(g.n):
        if g.bits >> pair_index(g.n, i, j) & 1:
            u, v = min(p[i], p[j]), max(p[i], p[j])
            bits |= 1 << pair_index(g.n, u, v)
    return SimpleGraph(g.n, bits)
