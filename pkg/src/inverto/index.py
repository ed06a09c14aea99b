"""Inversion index, graphic distance, and per-order index tables.

The workhorse is a multi-source breadth-first search over the whole code
space of one order: level 0 is the set of all n! acyclic codes, and each
generator is the XOR mask of a vertex set of size >= 2.  The resulting
distance array answers every index query for that order at once, so it is
cached per order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .booldim import boolean_dimension, find_representation, minimum_representation, parity_set_system
from .core import (
    InversionSequence,
    Tournament,
    boolean_sum,
    invert_seq,
    is_acyclic,
    npairs,
    subset_pair_mask,
    vertex_pairs,
)
from .errors import CapExceeded, ParseError

STATE_BFS_CAP = 7
STATE_BFS_HARD_CAP = 8
ORDER_MIN_CAP = 8

_DIST_CACHE: dict[int, np.ndarray] = {}


@dataclass(frozen=True)
class IndexResult:
    """Inversion index together with a witness sequence realizing it."""

    value: int
    witness: InversionSequence


def _order_code(n: int, order: tuple[int, ...]) -> int:
    """Code of the acyclic tournament in which order[0] beats everyone, etc."""
    pos = [0] * n
    for rank, v in enumerate(order):
        pos[v] = rank
    bits = 0
    k = 0
    for i in range(n - 1):
        for j in range(i + 1, n):
            if pos[i] < pos[j]:
                bits |= 1 << k
            k += 1
    return bits


def _acyclic_codes(n: int) -> list[int]:
    return [_order_code(n, order) for order in itertools.permutations(range(n))]


def _vertex_subsets(n: int) -> list[tuple[int, ...]]:
    """All vertex subsets of size >= 2 as sorted tuples, lexicographically.

    Smaller subsets are no-ops for inversion, so they are excluded.  The
    fixed order makes witness reconstruction deterministic.
    """
    subsets: list[tuple[int, ...]] = []
    for size in range(2, n + 1):
        subsets.extend(itertools.combinations(range(n), size))
    subsets.sort()
    return subsets


def _check_bfs_cap(n: int, allow_large: bool) -> None:
    cap = STATE_BFS_HARD_CAP if allow_large else STATE_BFS_CAP
    if n > cap:
        hint = " (pass allow_large / --allow-n8)" if n == STATE_BFS_HARD_CAP else ""
        raise CapExceeded(f"state-bfs supports order <= {cap}, got {n}{hint}")


def _index_distances(n: int) -> np.ndarray:
    """Distance-to-acyclic for every code of order n, as an int8 array."""
    cached = _DIST_CACHE.get(n)
    if cached is not None:
        return cached
    dtype = np.int64 if n <= STATE_BFS_CAP else np.int32
    dist = np.full(1 << npairs(n), -1, dtype=np.int8)
    frontier = np.unique(np.array(_acyclic_codes(n), dtype=dtype))
    dist[frontier] = 0
    masks = [subset_pair_mask(n, s) for s in _vertex_subsets(n)]
    level = 0
    while frontier.size:
        level += 1
        parts = []
        for mask in masks:
            cand = frontier ^ mask
            cand = cand[dist[cand] == -1]
            if cand.size:
                dist[cand] = level
                parts.append(cand)
        frontier = np.concatenate(parts) if parts else np.empty(0, dtype=dtype)
    assert not (dist == -1).any(), "inversion graph should be connected"
    _DIST_CACHE[n] = dist
    return dist


def _witness_from_table(t: Tournament, dist: np.ndarray) -> InversionSequence:
    """Greedy descent to level 0, taking the lexicographically least set
    that decreases the distance at each step."""
    subsets = _vertex_subsets(t.n)
    masks = [subset_pair_mask(t.n, s) for s in subsets]
    code = t.bits
    remaining = int(dist[code])
    witness = []
    while remaining > 0:
        for subset, mask in zip(subsets, masks):
            if dist[code ^ mask] == remaining - 1:
                witness.append(frozenset(subset))
                code ^= mask
                remaining -= 1
                break
        else:
            raise AssertionError("BFS table has no descent step")
    return tuple(witness)


def _order_min(t: Tournament) -> tuple[int, InversionSequence]:
    """Minimum over all vertex orders of dim_B(t (+) acyclic(order)).

    Keeps an incumbent and only searches strictly smaller dimensions for
    later orders, so most orders are dismissed cheaply.
    """
    best: int | None = None
    witness: InversionSequence = ()
    for order in itertools.permutations(range(t.n)):
        acyclic = Tournament(t.n, _order_code(t.n, order))
        g = boolean_sum(t, acyclic)
        if best is None:
            rep = minimum_representation(g)
        else:
            if best == 0:
                break
            rep = None
            for m in range(best):
                rep = find_representation(g, m)
                if rep is not None:
                    break
        if rep is not None and (best is None or rep.dimension < best):
            best = rep.dimension
            witness = parity_set_system(rep)
            witness = tuple(x for x in witness if len(x) >= 2)
    assert best is not None
    return best, witness


def inversion_index(t: Tournament, method: str = "state-bfs", allow_large: bool = False) -> IndexResult:
    """Least number of set inversions turning t into an acyclic tournament.

    method "state-bfs" reads the cached per-order BFS table (order <= 7,
    or 8 with allow_large); "order-min" minimizes the graphic distance to
    the n! acyclic tournaments (order <= 8).
    """
    if method == "state-bfs":
        _check_bfs_cap(t.n, allow_large)
        dist = _index_distances(t.n)
        value = int(dist[t.bits])
        witness = _witness_from_table(t, dist)
    elif method == "order-min":
        if t.n > ORDER_MIN_CAP:
            raise CapExceeded(f"order-min supports order <= {ORDER_MIN_CAP}, got {t.n}")
        value, witness = _order_min(t)
    else:
        raise ValueError(f"unknown method {method!r}")
    assert len(witness) == value and is_acyclic(invert_seq(t, witness))
    return IndexResult(value, witness)


def distance(t: Tournament, u: Tournament) -> int:
    """Graphic distance: Boolean dimension of the arc-difference graph."""
    if t.n != u.n:
        raise ValueError(f"order mismatch: {t.n} != {u.n}")
    return boolean_dimension(boolean_sum(t, u))


class IndexMap(Mapping[str, int]):
    """Read-only map from every code of one order to its inversion index."""

    def __init__(self, n: int, dist: np.ndarray):
        self.n = n
        self._dist = dist

    def __getitem__(self, code: str) -> int:
        try:
            t = Tournament.from_code(code)
        except ParseError:
            raise KeyError(code) from None
        if t.n != self.n:
            raise KeyError(code)
        return int(self._dist[t.bits])

    def __len__(self) -> int:
        return 1 << npairs(self.n)

    def __iter__(self) -> Iterator[str]:
        return (Tournament(self.n, bits).to_code() for bits in range(len(self)))

    def value_of(self, t: Tournament) -> int:
        if t.n != self.n:
            raise ValueError(f"order mismatch: {t.n} != {self.n}")
        return int(self._dist[t.bits])

    def max_index(self) -> int:
        return int(self._dist.max())

    def histogram(self) -> dict[int, int]:
        values, counts = np.unique(self._dist, return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}


def index_all(n: int, allow_large: bool = False) -> IndexMap:
    """Indices of all 2^(n(n-1)/2) labeled tournaments of order n."""
    _check_bfs_cap(n, allow_large)
    return IndexMap(n, _index_distances(n))


@dataclass(frozen=True)
class IndexTable:
    """Index of every isomorphism class of one order, plus the maximum i(n)."""

    n: int
    entries: tuple[tuple[str, int], ...]
    max_index: int

    def to_text(self) -> str:
        lines = [f"{code} {value}" for code, value in self.entries]
        lines.append(f"i({self.n}) = {self.max_index}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IndexTable":
        lines = [line.strip() for line in text.splitlines() if line.strip()]
        if not lines:
            raise ValueError("empty index table")
        summary = lines[-1].replace(" ", "")
        if not (summary.startswith("i(") and "=" in summary and ")" in summary):
            raise ValueError(f"bad summary line: {lines[-1]!r}")
        n = int(summary[2 : summary.index(")")])
        max_index = int(summary.split("=")[1])
        entries = []
        for line in lines[:-1]:
            code, value = line.split()
            entries.append((code, int(value)))
        table = cls(n, tuple(entries), max_index)
        if entries and max(v for _, v in entries) != max_index:
            raise ValueError("summary maximum disagrees with entries")
        return table


def counting_lower_bound(n: int) -> int:
    """Largest N with 2^(n(n-1)/2) > n! * 2^(n(N-1)), proving i(n) >= N.

    Exact integer arithmetic; this is the counting argument behind the
    (n-1)/2 - log2 n lower bound, and is at least as strong.
    """
    bound = 0
    candidate = 1
    while (1 << npairs(n)) > math.factorial(n) * (1 << (n * (candidate - 1))):
        bound = candidate
        candidate += 1
    return bound


def log2_lower_bound(n: int) -> int:
    """ceil((n-1)/2 - log2 n) by exact integer comparison (may be negative):
    N >= (n-1)/2 - log2 n  iff  n^2 >= 2^(n-1-2N)."""
    if n < 1:
        raise ValueError("order must be >= 1")
    candidate = -(n.bit_length() + 1)
    while True:
        exponent = n - 1 - 2 * candidate
        if exponent <= 0 or n * n >= (1 << exponent):
            return candidate
        candidate += 1


def index_table(n: int, allow_large: bool = False) -> IndexTable:
    """Index of each canonical class of order n; the maximum entry is i(n)."""
    from .hereditary import enumerate_classes  # deferred: hereditary imports us

    _check_bfs_cap(n, allow_large)
    dist = _index_distances(n)
    entries = []
    for code in enumerate_classes(n, allow_large).codes:
        t = Tournament.from_code(code)
        entries.append((code, int(dist[t.bits])))
    maximum = max(value for _, value in entries)
    if n >= 4:
        assert maximum <= n - 3, f"i({n}) = {maximum} violates the n-3 bound"
    assert maximum >= log2_lower_bound(n)
    return IndexTable(n, tuple(entries), maximum)


@dataclass(frozen=True)
class LowIndexCount:
    """Count of labeled tournaments with index < threshold, and its bound."""

    n: int
    threshold: int
    count: int
    bound: int


def count_low_index(n: int, threshold: int, allow_large: bool = False) -> LowIndexCount:
    """How many labeled tournaments of order n have index < threshold;
    checked against the n! * 2^(n(threshold-1)) counting bound."""
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    _check_bfs_cap(n, allow_large)
    dist = _index_distances(n)
    count = int((dist < threshold).sum())
    bound = math.factorial(n) * (1 << (n * (threshold - 1)))
    assert count <= bound
    return LowIndexCount(n, threshold, count, bound)
