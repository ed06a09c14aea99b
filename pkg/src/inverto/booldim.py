"""Exact Boolean dimension of a simple graph.

A width-m representation assigns to each vertex a vector in GF(2)^m so that
the standard scalar product of two distinct images equals their adjacency
bit.  The Boolean dimension is the least m admitting one.  Equivalently it
is the least number of vertex subsets realizing adjacency by odd containment
parity; ``parity_set_system`` converts a representation into that form.

The solver backtracks over vertices in descending-degree order.  At each
step the candidate vectors are exactly the solutions of a GF(2) linear
system (one equation per already-assigned vertex), so only the affine
solution space is enumerated, never the full 2^m cube.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .core import SimpleGraph, VertexSet, vertex_pairs


@dataclass(frozen=True)
class GF2Vector:
    """Vector in GF(2)^width, coordinates packed into an int."""

    width: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits {self.bits} out of range for width {self.width}")

    def coord(self, i: int) -> int:
        return self.bits >> i & 1

    def dot(self, other: "GF2Vector") -> int:
        return (self.bits & other.bits).bit_count() & 1


@dataclass(frozen=True)
class Representation:
    """Witness that ``graph`` is realized in GF(2)^dimension."""

    graph: SimpleGraph
    dimension: int
    vectors: tuple[GF2Vector, ...]

    def __post_init__(self):
        if len(self.vectors) != self.graph.n:
            raise ValueError("one vector per vertex required")
        for vec in self.vectors:
            if vec.width != self.dimension:
                raise ValueError("vector width differs from dimension")
        for x, y in vertex_pairs(self.graph.n):
            if self.vectors[x].dot(self.vectors[y]) != int(self.graph.has_edge(x, y)):
                raise ValueError(f"scalar product at pair ({x},{y}) contradicts adjacency")


def _affine_solutions(rows: list[int], rhs: list[int], m: int) -> Iterator[int]:
    """All x in GF(2)^m with parity(x & rows[j]) == rhs[j], in a fixed order.

    Maintains a reduced echelon basis (each pivot column appears in exactly
    one row), so the particular solution and nullspace basis read off
    directly; solutions are emitted by an increasing binary counter over
    the basis vectors, ordered by ascending free column.
    """
    pivots: list[tuple[int, int, int]] = []  # (column, row, rhs-bit), reduced
    for row, b in zip(rows, rhs):
        for col, prow, pb in pivots:
            if row >> col & 1:
                row ^= prow
                b ^= pb
        if row == 0:
            if b:
                return  # inconsistent
            continue
        col = (row & -row).bit_length() - 1
        pivots = [
            (c, r ^ row, pb ^ b) if r >> col & 1 else (c, r, pb)
            for c, r, pb in pivots
        ]
        pivots.append((col, row, b))
    particular = 0
    for col, _, b in pivots:
        if b:
            particular |= 1 << col
    pivot_cols = {c for c, _, _ in pivots}
    free_cols = [c for c in range(m) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        vec = 1 << fc
        for col, row, _ in pivots:
            if row >> fc & 1:
                vec |= 1 << col
        basis.append(vec)
    for counter in range(1 << len(basis)):
        x = particular
        c = counter
        k = 0
        while c:
            if c & 1:
                x ^= basis[k]
            c >>= 1
            k += 1
        yield x


def find_representation(g: SimpleGraph, m: int) -> Optional[Representation]:
    """A width-m representation of g, or None. Deterministic for fixed inputs."""
    if m < 0:
        raise ValueError(f"dimension must be non-negative, got {m}")
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    chosen: list[int] = []

    def extend(k: int) -> bool:
        if k == n:
            return True
        rows = chosen[:k]
        rhs = [int(g.has_edge(order[k], order[j])) for j in range(k)]
        for cand in _affine_solutions(rows, rhs, m):
            chosen.append(cand)
            if extend(k + 1):
                return True
            chosen.pop()
        return False

    if not extend(0):
        return None
    vectors = [GF2Vector(m, 0)] * n
    for pos, v in enumerate(order):
        vectors[v] = GF2Vector(m, chosen[pos])
    return Representation(g, m, tuple(vectors))


def minimum_representation(g: SimpleGraph) -> Representation:
    """Witness representation at the least feasible width.

    Ascending search from 0; width n-1 always suffices, so the loop
    terminates within the bound.
    """
    cap = max(g.n - 1, 0)
    for m in range(cap + 1):
        rep = find_representation(g, m)
        if rep is not None:
            return rep
    raise AssertionError(f"no representation up to width {cap} for {g.to_code()}")


def boolean_dimension(g: SimpleGraph) -> int:
    """Least m such that g is realized in GF(2)^m."""
    return minimum_representation(g).dimension


def parity_set_system(rep: Representation) -> tuple[VertexSet, ...]:
    """Coordinate slices X_i = {x : f(x)_i = 1} of a representation.

    A pair is an edge of the represented graph iff it lies inside an odd
    number of the X_i; this is re-checked before returning.
    """
    sets = tuple(
        frozenset(x for x in range(rep.graph.n) if rep.vectors[x].coord(i))
        for i in range(rep.dimension)
    )
    for x, y in vertex_pairs(rep.graph.n):
        parity = sum(1 for s in sets if x in s and y in s) & 1
        if parity != int(rep.graph.has_edge(x, y)):
            raise AssertionError("parity system disagrees with represented graph")
    return sets
