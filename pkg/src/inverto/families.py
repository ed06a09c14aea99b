"""Constructors for the named tournaments: chains, the critical families
U/T/V, the six (-1)-critical families, the Paley tournament P7, and the five
obstructions of the index-at-most-one class.

Family parameters follow the half-order convention: ``critical_u(n)`` builds
U on 2n+1 vertices.  Every constructor applies its defining inversion
sequence to the increasing chain, so outputs are exact labeled tournaments,
not merely isomorphism classes.
"""

from __future__ import annotations

from .core import (
    Tournament,
    VertexSet,
    delete_vertex,
    dual,
    invert,
    invert_seq,
    npairs,
    pair_index,
)

MINUS_ONE_CRITICAL_KINDS = ("E", "F", "G", "H", "F*", "G*")


def transitive(n: int) -> Tournament:
    """The increasing chain: arcs i -> j for all i < j."""
    if n < 0:
        raise ValueError(f"order must be non-negative, got {n}")
    return Tournament(n, (1 << npairs(n)) - 1)


def _evens(count: int) -> VertexSet:
    """{0, 2, ..., 2(count-1)}"""
    return frozenset(2 * i for i in range(count))


def _odds(count: int) -> VertexSet:
    """{1, 3, ..., 2count-1}"""
    return frozenset(2 * i + 1 for i in range(count))


def critical_u(n: int) -> Tournament:
    """U on 2n+1 vertices: the chain with the even positions reversed.

    Accepted for n >= 1 (U3 is the 3-cycle); critical for n >= 2.
    """
    if n < 1:
        raise ValueError(f"critical_u requires n >= 1, got {n}")
    return invert(transitive(2 * n + 1), _evens(n + 1))


def critical_t(n: int) -> Tournament:
    """T on 2n+1 vertices: evens reversed, then odds reversed."""
    if n < 2:
        raise ValueError(f"critical_t requires n >= 2, got {n}")
    return invert_seq(transitive(2 * n + 1), (_evens(n + 1), _odds(n)))


def critical_v(n: int) -> Tournament:
    """V on 2n+1 vertices: evens reversed, then evens below the top."""
    if n < 2:
        raise ValueError(f"critical_v requires n >= 2, got {n}")
    return invert_seq(transitive(2 * n + 1), (_evens(n + 1), _evens(n)))


def minus_one_critical(kind: str, n: int, k: int) -> Tournament:
    """One of the six (-1)-critical families on 2n+1 vertices.

    kind is E, F, G, H, F* or G* (the starred kinds are duals); requires
    n >= 3 and 1 <= k <= n-2.
    """
    if kind not in MINUS_ONE_CRITICAL_KINDS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {MINUS_ONE_CRITICAL_KINDS}")
    if n < 3:
        raise ValueError(f"minus_one_critical requires n >= 3, got {n}")
    if not 1 <= k <= n - 2:
        raise ValueError(f"k must be in 1..{n - 2}, got {k}")
    chain = transitive(2 * n + 1)
    if kind == "E":
        return invert_seq(chain, (_evens(n + 1), _evens(k + 1), _evens(n + 1) - _evens(k + 1)))
    if kind == "F":
        return invert_seq(chain, (_evens(n + 1), _evens(n + 1) - _evens(k + 1)))
    if kind == "G":
        return invert_seq(chain, (_evens(n + 1), _evens(n), _evens(k + 1)))
    if kind == "H":
        return invert_seq(
            chain,
            (_evens(k + 1), _evens(k), _evens(n + 1) - _evens(k), _evens(n) - _evens(k)),
        )
    return dual(minus_one_critical(kind[0], n, k))


def paley7() -> Tournament:
    """Paley tournament on Z/7Z: arc i -> j iff j - i is 1, 2 or 4 mod 7."""
    bits = 0
    for i in range(7):
        for j in range(i + 1, 7):
            if (j - i) % 7 in (1, 2, 4):
                bits |= 1 << pair_index(7, i, j)
    return Tournament(7, bits)


def bound_b6() -> Tournament:
    """B6: the Paley tournament P7 with vertex 6 deleted."""
    return delete_vertex(paley7(), 6)


def b6_by_inversion() -> Tournament:
    """The labeled two-inversion presentation of B6 (isomorphic to bound_b6)."""
    return invert_seq(transitive(6), (frozenset({0, 3, 4}), frozenset({1, 4, 5})))


def c3_dot_2() -> Tournament:
    """Two stacked 3-cycles: chain on 6 with {0,2} then {3,5} reversed."""
    return invert_seq(transitive(6), (frozenset({0, 2}), frozenset({3, 5})))


def d5() -> Tournament:
    return invert_seq(transitive(5), (frozenset({1, 3}), frozenset({0, 4})))


def t5() -> Tournament:
    return critical_t(2)


def v5() -> Tournament:
    return critical_v(2)


def bounds_of_i1() -> tuple[Tournament, ...]:
    """The five obstructions of the index-at-most-one class: B6, C3.2, D5, T5, V5."""
    return (b6_by_inversion(), c3_dot_2(), d5(), t5(), v5())
