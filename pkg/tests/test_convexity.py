import itertools

import pytest

from conftest import seeded_random_graphs
from wtoll.convexity import (
    check_max_interval_decomposition,
    check_wtn_exceeds_two_criterion,
    hull,
    interval_report,
    is_convex,
    maximum_interval_pairs,
    wth,
    wtn,
)
from wtoll.graphs import (
    CompleteGraphError,
    Graph,
    TrivialGraphError,
    VertexSet,
    complete_graph,
    cycle_graph,
    path_graph,
    random_tree,
    two_clique_bridge,
)
from wtoll.intervals import IntervalKind
from wtoll.oracle import oracle_wth, oracle_wtn

CLAW = Graph.from_edge_list(4, [(1, 0), (1, 2), (1, 3)])


def test_claw_convexity_split():
    s = VertexSet.from_iterable(4, [0, 1, 2])
    assert is_convex(CLAW, s, IntervalKind.TOLL)
    assert not is_convex(CLAW, s, IntervalKind.WEAKLY_TOLL)
    assert is_convex(CLAW, VertexSet.full(4), IntervalKind.WEAKLY_TOLL)


def test_hull_examples():
    c5 = cycle_graph(5)
    convex = VertexSet.from_iterable(5, [0, 1])
    assert hull(c5, convex, IntervalKind.WEAKLY_TOLL) == convex

    tree = random_tree(8, 5)
    leaves = [v for v in range(8) if tree.degree(v) == 1]
    assert hull(tree, VertexSet.from_iterable(8, leaves[:2])) == VertexSet.full(8)

    bridge = two_clique_bridge(3)
    five = hull(bridge, VertexSet.from_iterable(7, [1, 4]))
    assert sorted(five) == [0, 1, 3, 4, 6]

    with pytest.raises(ValueError):
        hull(c5, VertexSet.from_iterable(5, []))


def test_wtn_known_values():
    assert wtn(cycle_graph(5))[0] == 2
    assert wtn(complete_graph(5))[0] == 5
    value, witness = wtn(two_clique_bridge(3))
    assert value == 4 and sorted(witness) == [1, 2, 4, 5]
    assert wtn(two_clique_bridge(4))[0] == 6
    for seed in range(8):
        assert wtn(random_tree(5 + seed % 4, seed))[0] == 2


def test_wtn_with_two_leaves_is_two():
    for seed in range(8):
        base = seeded_random_graphs(1, sizes=(5,), base_seed=3300 + seed)[0]
        n = base.n
        edges = base.edges() + [(0, n), (1, n + 1)]
        g = Graph.from_edge_list(n + 2, edges)
        assert wtn(g)[0] == 2


def test_wtn_errors():
    with pytest.raises(TrivialGraphError):
        wtn(complete_graph(1))


def test_wtn_and_wth_match_oracle():
    for g in seeded_random_graphs(10, sizes=(5, 6, 7), base_seed=3400):
        assert wtn(g) == oracle_wtn(g)
        assert wth(g) == oracle_wth(g)
        assert wth(g)[0] <= wtn(g)[0]


def test_wtn_two_iff_full_pair_interval():
    from wtoll.intervals import weakly_toll_interval

    for g in seeded_random_graphs(12, sizes=(5, 6), base_seed=3500):
        full = VertexSet.full(g.n)
        some_full_pair = any(
            weakly_toll_interval(g, u, v) == full
            for u in range(g.n)
            for v in range(u + 1, g.n)
        )
        assert (wtn(g)[0] == 2) == some_full_pair


def test_maximum_interval_pairs():
    tree = random_tree(7, 9)
    pairs = maximum_interval_pairs(tree)
    leaves = {v for v in range(7) if tree.degree(v) == 1}
    for u, v, report in pairs:
        assert not report.outside
        assert report.interval == VertexSet.full(7)
    assert any(u in leaves and v in leaves for u, v, _ in pairs)

    claw_pairs = maximum_interval_pairs(CLAW)
    assert [(u, v) for u, v, _ in claw_pairs] == [(0, 2), (0, 3), (2, 3)]
    assert all(len(r.interval) == 4 for _, _, r in claw_pairs)

    bridge_pairs = maximum_interval_pairs(two_clique_bridge(3))
    assert all(len(r.interval) == 5 for _, _, r in bridge_pairs)
    assert (1, 4) in [(u, v) for u, v, _ in bridge_pairs]

    with pytest.raises(CompleteGraphError):
        maximum_interval_pairs(complete_graph(4))


def test_interval_report_fields():
    report = interval_report(two_clique_bridge(3), 1, 4)
    assert sorted(report.interval) == [0, 1, 3, 4, 6]
    assert sorted(report.outside) == [2, 5]
    assert sorted(report.missed_near_u) == [2]
    assert sorted(report.missed_near_v) == [5]


def test_decomposition_checks():
    assert check_max_interval_decomposition(path_graph(5))
    assert check_wtn_exceeds_two_criterion(path_graph(5))
    assert check_max_interval_decomposition(two_clique_bridge(3))
    assert check_wtn_exceeds_two_criterion(two_clique_bridge(3))
    for g in seeded_random_graphs(12, sizes=(5, 6, 7), base_seed=3600):
        if g.is_complete():
            continue
        assert check_max_interval_decomposition(g)
        assert check_wtn_exceeds_two_criterion(g)


def test_convexity_nesting_over_subsets():
    order = [
        IntervalKind.WEAKLY_TOLL,
        IntervalKind.TOLL,
        IntervalKind.MONOPHONIC,
        IntervalKind.GEODESIC,
    ]
    for g in seeded_random_graphs(6, sizes=(4, 5), base_seed=3700):
        for bits in range(1 << g.n):
            s = VertexSet(g.n, bits)
            flags = [is_convex(g, s, kind) for kind in order]
            for stronger, weaker in zip(flags, flags[1:]):
                assert not stronger or weaker


def test_hull_closure_axioms():
    import random

    rng = random.Random(99)
    kinds = list(IntervalKind)
    for g in seeded_random_graphs(10, sizes=(5, 6), base_seed=3800):
        kind = kinds[rng.randrange(len(kinds))]
        small = VertexSet.from_iterable(g.n, rng.sample(range(g.n), 2))
        big = small | VertexSet.from_iterable(g.n, rng.sample(range(g.n), 2))
        h_small = hull(g, small, kind)
        assert small <= h_small
        assert hull(g, h_small, kind) == h_small
        assert h_small <= hull(g, big, kind)


def test_hull_is_least_convex_superset():
    # the fixpoint agrees with the intersection of all convex supersets
    for g in seeded_random_graphs(4, sizes=(4,), base_seed=4000):
        for kind in (IntervalKind.WEAKLY_TOLL, IntervalKind.TOLL):
            for bits in range(1, 1 << g.n):
                seed = VertexSet(g.n, bits)
                closed = hull(g, seed, kind)
                assert is_convex(g, closed, kind)
                for sup_bits in range(1 << g.n):
                    sup = VertexSet(g.n, sup_bits)
                    if seed <= sup and is_convex(g, sup, kind):
                        assert closed <= sup


def test_every_weakly_toll_set_is_a_hull_set():
    from wtoll.intervals import is_weakly_toll_set

    for g in seeded_random_graphs(8, sizes=(5, 6), base_seed=3900):
        value, witness = wtn(g)
        assert is_weakly_toll_set(g, witness)
        assert hull(g, witness) == VertexSet.full(g.n)
