"""Intervals, indecomposability, lexicographic sums, and criticality.

A vertex set X is an interval when every outside vertex relates to all of
X the same way.  With per-vertex out-neighbour bitmasks that is two mask
comparisons, so the exhaustive scans below stay cheap up to order 16.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    Tournament,
    VertexSet,
    check_vertex_set,
    delete_vertex,
    is_acyclic,
    restrict,
)
from .errors import CapExceeded

INTERVAL_ENUM_CAP = 16


def _out_masks(t: Tournament) -> list[int]:
    masks = [0] * t.n
    for x, y in t.arcs():
        masks[x] |= 1 << y
    return masks


def _is_interval_mask(out: list[int], n: int, xmask: int) -> bool:
    for y in range(n):
        if xmask >> y & 1:
            continue
        hit = out[y] & xmask
        if hit != 0 and hit != xmask:
            return False
    return True


def is_interval(t: Tournament, x) -> bool:
    """True when every vertex outside x relates uniformly to all of x."""
    xs = check_vertex_set(t.n, x)
    xmask = 0
    for v in xs:
        xmask |= 1 << v
    return _is_interval_mask(_out_masks(t), t.n, xmask)


def intervals(t: Tournament) -> list[VertexSet]:
    """All intervals of t, including the trivial ones (empty, singletons, V)."""
    if t.n > INTERVAL_ENUM_CAP:
        raise CapExceeded(f"interval enumeration supports order <= {INTERVAL_ENUM_CAP}, got {t.n}")
    out = _out_masks(t)
    found = []
    for xmask in range(1 << t.n):
        if _is_interval_mask(out, t.n, xmask):
            found.append(frozenset(v for v in range(t.n) if xmask >> v & 1))
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found


def is_indecomposable(t: Tournament) -> bool:
    """No interval other than the empty set, the singletons, and V itself.

    Orders <= 2 have only trivial intervals, hence count as indecomposable.
    """
    if t.n > INTERVAL_ENUM_CAP:
        raise CapExceeded(f"indecomposability check supports order <= {INTERVAL_ENUM_CAP}, got {t.n}")
    out = _out_masks(t)
    full = (1 << t.n) - 1
    for xmask in range(1 << t.n):
        if xmask.bit_count() < 2 or xmask == full:
            continue
        if _is_interval_mask(out, t.n, xmask):
            return False
    return True


def is_acyclically_indecomposable(t: Tournament) -> bool:
    """No acyclic interval with more than one element.

    V itself counts: a whole acyclic tournament on >= 2 vertices is an
    acyclic interval, so it is not acyclically indecomposable, while the
    one-vertex tournament is.
    """
    if t.n > INTERVAL_ENUM_CAP:
        raise CapExceeded(f"acyclic-indecomposability check supports order <= {INTERVAL_ENUM_CAP}, got {t.n}")
    out = _out_masks(t)
    for xmask in range(1 << t.n):
        if xmask.bit_count() < 2:
            continue
        if _is_interval_mask(out, t.n, xmask):
            members = [v for v in range(t.n) if xmask >> v & 1]
            if is_acyclic(restrict(t, members)):
                return False
    return True


def lex_sum(q: Tournament, blocks) -> Tournament:
    """Replace each vertex i of the quotient q by blocks[i]; arcs between
    different blocks all follow the quotient arc."""
    blocks = tuple(blocks)
    if len(blocks) != q.n:
        raise ValueError(f"need exactly {q.n} blocks, got {len(blocks)}")
    owner = []
    local = []
    for bi, block in enumerate(blocks):
        for v in range(block.n):
            owner.append(bi)
            local.append(v)
    n = len(owner)
    bits = 0
    k = 0
    for a in range(n - 1):
        for b in range(a + 1, n):
            if owner[a] == owner[b]:
                arc = blocks[owner[a]].has_arc(local[a], local[b])
            else:
                arc = q.has_arc(owner[a], owner[b])
            if arc:
                bits |= 1 << k
            k += 1
    return Tournament(n, bits)


@dataclass(frozen=True)
class AcyclicDecomposition:
    """t as a lexicographic sum of acyclic blocks over an acyclically
    indecomposable quotient.  block_vertices[i] lists the original
    vertices carried by quotient vertex i, in block-local order."""

    quotient: Tournament
    blocks: tuple[Tournament, ...]
    block_vertices: tuple[tuple[int, ...], ...]

    def recompose(self) -> Tournament:
        """Rebuild the original tournament through the vertex maps."""
        location = {}
        for bi, vertices in enumerate(self.block_vertices):
            for li, v in enumerate(vertices):
                location[v] = (bi, li)
        n = sum(block.n for block in self.blocks)
        bits = 0
        k = 0
        for i in range(n - 1):
            for j in range(i + 1, n):
                bi, li = location[i]
                bj, lj = location[j]
                if bi == bj:
                    arc = self.blocks[bi].has_arc(li, lj)
                else:
                    arc = self.quotient.has_arc(bi, bj)
                if arc:
                    bits |= 1 << k
                k += 1
        return Tournament(n, bits)


def _contractible_interval(t: Tournament) -> list[int] | None:
    """The acyclic interval of size >= 2 to contract next, or None.

    Deterministic choice: among inclusion-maximal acyclic intervals, the
    one whose sorted vertex tuple is lexicographically least.
    """
    out = _out_masks(t)
    candidates = []
    for xmask in range(1 << t.n):
        if xmask.bit_count() < 2:
            continue
        if _is_interval_mask(out, t.n, xmask):
            members = [v for v in range(t.n) if xmask >> v & 1]
            if is_acyclic(restrict(t, members)):
                candidates.append(xmask)
    if not candidates:
        return None
    maximal = [
        x for x in candidates
        if not any(y != x and y & x == x for y in candidates)
    ]
    return min(
        ([v for v in range(t.n) if x >> v & 1] for x in maximal),
        key=lambda members: tuple(members),
    )


def acyclic_decompose(t: Tournament) -> AcyclicDecomposition:
    """Contract maximal acyclic intervals to fixpoint; the result is the
    (guarded) lexicographic-sum decomposition over an acyclically
    indecomposable quotient."""
    if t.n == 0:
        raise ValueError("cannot decompose the empty tournament")
    if t.n > INTERVAL_ENUM_CAP:
        raise CapExceeded(f"decomposition supports order <= {INTERVAL_ENUM_CAP}, got {t.n}")
    quotient = t
    blocks = [Tournament(1, 0)] * t.n
    vertices = [(v,) for v in range(t.n)]
    while True:
        members = _contractible_interval(quotient)
        if members is None:
            break
        merged_block = lex_sum(restrict(quotient, members), [blocks[v] for v in members])
        merged_vertices = tuple(itertools.chain.from_iterable(vertices[v] for v in members))
        keep = [v for v in range(quotient.n) if v not in members or v == members[0]]
        blocks = [merged_block if v == members[0] else blocks[v] for v in keep]
        vertices = [merged_vertices if v == members[0] else vertices[v] for v in keep]
        # the contracted interval is represented by its smallest member,
        # which relates to the outside exactly as the whole interval did
        quotient = restrict(quotient, keep)
    result = AcyclicDecomposition(quotient, tuple(blocks), tuple(vertices))
    assert all(block.n > 0 and is_acyclic(block) for block in result.blocks)
    assert is_acyclically_indecomposable(result.quotient)
    assert result.recompose() == t, "decomposition failed to recompose"
    return result


def _require_indecomposable(t: Tournament) -> None:
    if t.n == 0:
        raise ValueError("criticality is defined for nonempty tournaments")
    if not is_indecomposable(t):
        raise ValueError("criticality is defined for indecomposable tournaments")


def is_critical_vertex(t: Tournament, x: int) -> bool:
    """x is critical when deleting it leaves a decomposable tournament."""
    _require_indecomposable(t)
    if not 0 <= x < t.n:
        raise ValueError(f"vertex {x} out of range for order {t.n}")
    return not is_indecomposable(delete_vertex(t, x))


def noncritical_vertices(t: Tournament) -> VertexSet:
    _require_indecomposable(t)
    return frozenset(
        x for x in range(t.n) if is_indecomposable(delete_vertex(t, x))
    )


def is_critical_tournament(t: Tournament) -> bool:
    """Every vertex is critical (t indecomposable and nonempty required)."""
    return not noncritical_vertices(t)
