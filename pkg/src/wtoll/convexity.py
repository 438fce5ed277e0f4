"""Convex-set predicates, hull fixpoints, and exact interval numbers.

The exact searches enumerate candidate sets by increasing cardinality with
pairwise intervals precomputed once per graph, so the minimum and its
lexicographically least witness come out deterministically.  On the graph
products this package targets, the searches stop at three-element sets, so
exhaustive search stays cheap exactly where it is needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (
    Graph,
    VertexSet,
    require_connected,
    require_non_complete,
    require_non_trivial,
)
from .intervals import (
    SYMMETRIC_KINDS,
    IntervalKind,
    interval,
    interval_closure,
    weakly_toll_interval,
)


@dataclass(frozen=True)
class IntervalReport:
    """One vertex pair's interval and what its closed neighbourhoods miss.

    ``outside`` is everything the interval fails to reach; ``missed_near_u``
    and ``missed_near_v`` are the parts of N[u] and N[v] it fails to reach.
    At a maximum-size interval between non-adjacent endpoints the outside
    splits exactly into those two disjoint neighbourhood parts.
    """

    u: int
    v: int
    interval: VertexSet
    outside: VertexSet
    missed_near_u: VertexSet
    missed_near_v: VertexSet
    is_maximum: bool


def _pair_interval_masks(graph: Graph, kind: IntervalKind) -> dict[tuple[int, int], int]:
    masks = {}
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            masks[u, v] = interval(graph, u, v, kind).mask
            if kind not in SYMMETRIC_KINDS:
                masks[v, u] = interval(graph, v, u, kind).mask
    return masks


def is_convex(graph: Graph, subset: VertexSet, kind: IntervalKind) -> bool:
    """Whether every pairwise interval of the subset stays inside it."""
    kind = IntervalKind(kind)
    require_connected(graph, "convexity test")
    members = list(subset)
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if interval(graph, u, v, kind).mask & ~subset.mask:
                return False
            if kind not in SYMMETRIC_KINDS and interval(graph, v, u, kind).mask & ~subset.mask:
                return False
    return True


def hull(graph: Graph, subset: VertexSet, kind: IntervalKind = IntervalKind.WEAKLY_TOLL) -> VertexSet:
    """Least interval-closed superset: iterate the closure to its fixpoint."""
    kind = IntervalKind(kind)
    if not subset:
        raise ValueError("hull needs a nonempty seed set")
    current = subset
    while True:
        grown = interval_closure(graph, current, kind)
        if grown == current:
            return current
        current = grown


def wtn(graph: Graph) -> tuple[int, VertexSet]:
    """Exact weakly toll number with the lexicographically least witness."""
    require_connected(graph, "weakly toll number")
    require_non_trivial(graph, "weakly toll number")
    full = (1 << graph.n) - 1
    pair = _pair_interval_masks(graph, IntervalKind.WEAKLY_TOLL)
    for k in range(1, graph.n + 1):
        for combo in itertools.combinations(range(graph.n), k):
            mask = 0
            for i, u in enumerate(combo):
                mask |= 1 << u
                for v in combo[i + 1 :]:
                    mask |= pair[u, v]
            if mask == full:
                return k, VertexSet.from_iterable(graph.n, combo)
    raise AssertionError("the full vertex set always covers itself")


def wth(graph: Graph) -> tuple[int, VertexSet]:
    """Exact weakly toll hull number with the lexicographically least witness."""
    require_connected(graph, "weakly toll hull number")
    require_non_trivial(graph, "weakly toll hull number")
    full = (1 << graph.n) - 1
    pair = _pair_interval_masks(graph, IntervalKind.WEAKLY_TOLL)

    def hull_mask(seed: int) -> int:
        current = seed
        while True:
            members = [x for x in range(graph.n) if current >> x & 1]
            grown = current
            for i, u in enumerate(members):
                for v in members[i + 1 :]:
                    grown |= pair[u, v]
            if grown == current:
                return current
            current = grown

    for k in range(1, graph.n + 1):
        for combo in itertools.combinations(range(graph.n), k):
            seed = 0
            for u in combo:
                seed |= 1 << u
            if hull_mask(seed) == full:
                return k, VertexSet.from_iterable(graph.n, combo)
    raise AssertionError("the full vertex set always covers itself")


def interval_report(graph: Graph, u: int, v: int, is_maximum: bool = False) -> IntervalReport:
    inside = weakly_toll_interval(graph, u, v)
    outside = inside.complement()
    return IntervalReport(
        u=u,
        v=v,
        interval=inside,
        outside=outside,
        missed_near_u=graph.closed_neighborhood(u) & outside,
        missed_near_v=graph.closed_neighborhood(v) & outside,
        is_maximum=is_maximum,
    )


def maximum_interval_pairs(graph: Graph) -> list[tuple[int, int, IntervalReport]]:
    """All pairs whose weakly toll interval has maximum cardinality.

    On a connected non-complete graph some non-adjacent pair reaches at
    least three vertices while adjacent pairs reach exactly two, so every
    maximum pair is non-adjacent; this is asserted rather than assumed.
    """
    require_connected(graph, "maximum interval search")
    require_non_complete(graph, "maximum interval search")
    sizes = {}
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            sizes[u, v] = len(weakly_toll_interval(graph, u, v))
    best = max(sizes.values())
    out = []
    for (u, v), size in sorted(sizes.items()):
        if size == best:
            assert not graph.adjacent(u, v), "maximum interval at an adjacent pair"
            out.append((u, v, interval_report(graph, u, v, is_maximum=True)))
    return out


def check_max_interval_decomposition(graph: Graph) -> bool:
    """At every maximum pair, the outside is exactly the disjoint union of
    the missed parts of the two closed neighbourhoods."""
    for _, _, report in maximum_interval_pairs(graph):
        if report.outside != report.missed_near_u | report.missed_near_v:
            return False
        if not report.missed_near_u.isdisjoint(report.missed_near_v):
            return False
    return True


def check_wtn_exceeds_two_criterion(graph: Graph) -> bool:
    """wtn(G) > 2 holds exactly when every maximum pair misses something
    next to one of its endpoints."""
    value, _ = wtn(graph)
    all_miss = all(
        bool(report.missed_near_u | report.missed_near_v)
        for _, _, report in maximum_interval_pairs(graph)
    )
    return (value > 2) == all_miss
