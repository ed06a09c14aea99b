import itertools
import random

import pytest

from inverto.core import Tournament, is_acyclic, npairs, restrict
from inverto.errors import CapExceeded
from inverto.families import transitive
from inverto.index import index_all
from inverto.structure import (
    AcyclicDecomposition,
    acyclic_decompose,
    intervals,
    is_acyclically_indecomposable,
    is_critical_vertex,
    is_indecomposable,
    is_interval,
    lex_sum,
    noncritical_vertices,
)

from oracles import random_tournament


def interval_by_definition(t, xs):
    """Every vertex outside xs beats all of xs or loses to all of xs."""
    xs = set(xs)
    for y in range(t.n):
        if y in xs:
            continue
        towards = {t.has_arc(y, x) for x in xs}
        if len(towards) > 1:
            return False
    return True


def test_three_cycle_has_only_trivial_intervals():
    c3 = Tournament.from_code("T3:101")
    found = intervals(c3)
    assert found == [
        frozenset(),
        frozenset({0}),
        frozenset({1}),
        frozenset({2}),
        frozenset({0, 1, 2}),
    ]
    assert is_indecomposable(c3)
    assert is_acyclically_indecomposable(c3)


def test_chain_intervals_are_consecutive_runs():
    t = transitive(4)
    found = set(intervals(t))
    runs = {
        frozenset(range(a, b))
        for a in range(5)
        for b in range(a, 5)
    }
    assert found == runs
    assert not is_indecomposable(t)


def test_is_interval_matches_definition():
    rng = random.Random(101)
    for _ in range(30):
        n = rng.randint(1, 5)
        t = random_tournament(n, rng)
        for size in range(n + 1):
            for xs in itertools.combinations(range(n), size):
                assert is_interval(t, xs) == interval_by_definition(t, xs)


def test_intervals_listing_matches_point_queries():
    rng = random.Random(103)
    for _ in range(20):
        t = random_tournament(5, rng)
        listed = set(intervals(t))
        for size in range(6):
            for xs in itertools.combinations(range(5), size):
                assert (frozenset(xs) in listed) == is_interval(t, xs)


def test_indecomposable_iff_only_trivial_intervals():
    rng = random.Random(107)
    for _ in range(40):
        n = rng.randint(1, 6)
        t = random_tournament(n, rng)
        nontrivial = [
            x for x in intervals(t) if 2 <= len(x) < t.n
        ]
        assert is_indecomposable(t) == (not nontrivial)


def test_acyclically_indecomposable_relation():
    # for an indecomposable tournament of order >= 3 the only interval of
    # size >= 2 is the whole vertex set, so the acyclic variant reduces to
    # "not acyclic"; small orders are settled directly
    for n in range(0, 6):
        for bits in range(1 << npairs(n)):
            t = Tournament(n, bits)
            expected = not any(
                len(x) >= 2 and is_acyclic(restrict(t, x)) for x in intervals(t)
            )
            assert is_acyclically_indecomposable(t) == expected
            if n >= 3 and is_indecomposable(t):
                assert is_acyclically_indecomposable(t) == (not is_acyclic(t))


def test_lex_sum_of_singletons_is_quotient():
    rng = random.Random(109)
    for _ in range(20):
        q = random_tournament(rng.randint(1, 6), rng)
        assert lex_sum(q, [Tournament(1, 0)] * q.n) == q


def test_lex_sum_blocks_become_intervals():
    rng = random.Random(113)
    for _ in range(20):
        q = random_tournament(3, rng)
        blocks = [random_tournament(rng.randint(1, 3), rng) for _ in range(3)]
        total = lex_sum(q, blocks)
        start = 0
        for bi, block in enumerate(blocks):
            span = range(start, start + block.n)
            assert is_interval(total, span)
            assert restrict(total, span) == block
            start += block.n
        # arcs between blocks follow the quotient
        starts = [sum(b.n for b in blocks[:i]) for i in range(3)]
        for i, j in itertools.combinations(range(3), 2):
            assert total.has_arc(starts[i], starts[j]) == q.has_arc(i, j)
    with pytest.raises(ValueError):
        lex_sum(transitive(2), [Tournament(1, 0)])


def test_decompose_chain_collapses_to_point():
    for n in range(1, 7):
        d = acyclic_decompose(transitive(n))
        assert d.quotient.n == 1
        assert d.blocks == (transitive(n),)
        assert d.block_vertices == (tuple(range(n)),)


def test_decompose_fixes_acyclically_indecomposable():
    c3 = Tournament.from_code("T3:101")
    d = acyclic_decompose(c3)
    assert d.quotient == c3
    assert all(block.n == 1 for block in d.blocks)


def test_decompose_exhaustive_small_orders():
    for n in range(1, 6):
        for bits in range(1 << npairs(n)):
            t = Tournament(n, bits)
            d = acyclic_decompose(t)
            assert is_acyclically_indecomposable(d.quotient)
            assert all(is_acyclic(b) and b.n >= 1 for b in d.blocks)
            assert d.recompose() == t
            # each block's carried vertex set is an interval of t
            for vertices in d.block_vertices:
                assert is_interval(t, vertices)


def test_decompose_random_order_six():
    rng = random.Random(127)
    for _ in range(100):
        t = random_tournament(6, rng)
        d = acyclic_decompose(t)
        assert is_acyclically_indecomposable(d.quotient)
        assert d.recompose() == t


def test_index_invariant_under_decomposition():
    # collapsing acyclic intervals never changes the inversion index
    tables = {n: index_all(n) for n in range(1, 7)}
    for bits in range(1 << npairs(5)):
        t = Tournament(5, bits)
        d = acyclic_decompose(t)
        assert tables[5].value_of(t) == tables[d.quotient.n].value_of(d.quotient)
    rng = random.Random(9)
    for _ in range(100):
        t = random_tournament(6, rng)
        d = acyclic_decompose(t)
        assert tables[6].value_of(t) == tables[d.quotient.n].value_of(d.quotient)


def test_decomposition_reconstruction_is_pure():
    rng = random.Random(131)
    t = random_tournament(6, rng)
    d = acyclic_decompose(t)
    rebuilt = AcyclicDecomposition(d.quotient, d.blocks, d.block_vertices)
    assert rebuilt.recompose() == t


def test_criticality_preconditions():
    with pytest.raises(ValueError):
        is_critical_vertex(transitive(3), 0)  # decomposable
    with pytest.raises(ValueError):
        noncritical_vertices(Tournament(0, 0))  # empty
    c3 = Tournament.from_code("T3:101")
    with pytest.raises(ValueError):
        is_critical_vertex(c3, 5)
    # deleting any vertex of the 3-cycle leaves an order-2 tournament,
    # which counts as indecomposable, so no vertex is critical
    assert noncritical_vertices(c3) == frozenset({0, 1, 2})


def test_caps():
    big = transitive(17)
    with pytest.raises(CapExceeded):
        intervals(big)
    with pytest.raises(CapExceeded):
        is_indecomposable(big)
    with pytest.raises(CapExceeded):
        is_acyclically_indecomposable(big)
    with pytest.raises(CapExceeded):
        acyclic_decompose(big)
    with pytest.raises(ValueError):
        acyclic_decompose(Tournament(0, 0))
