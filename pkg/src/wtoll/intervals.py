"""Walk-based intervals on connected graphs.

Five interval notions are supported.  A weakly toll walk between u and v is
a walk whose only vertex adjacent to u is its second vertex and whose only
vertex adjacent to v is its second-to-last vertex, where those two "hub"
vertices may repeat along the walk.  A tolled walk additionally requires
each hub to occur exactly once.  A semi weakly toll walk keeps the
restriction at the source u only.  Monophonic and geodesic intervals are the
classical induced-path and shortest-path intervals.

The weakly toll / semi weakly toll / toll engines below do not enumerate
walks.  They rely on a hub decomposition: once the first-step neighbour a of
u and the last-step neighbour b of v are fixed, every other interior vertex
must avoid N[u] and N[v] entirely, so the reachable interior is a union of
connected components of G - (N[u] | N[v]).  The component bookkeeping per
vertex pair costs O(deg(u) * deg(v)) bitmask operations.  Module ``oracle``
recomputes the same sets by direct walk enumeration, and the test suite
keeps both in exact agreement over an exhaustive small-graph corpus.
"""

from __future__ import annotations

from enum import Enum

from .graphs import Graph, VertexSet, _bits, require_connected


class IntervalKind(str, Enum):
    WEAKLY_TOLL = "weakly-toll"
    SEMI_WEAKLY_TOLL = "semi-weakly-toll"
    TOLL = "toll"
    MONOPHONIC = "monophonic"
    GEODESIC = "geodesic"


#: Kinds whose interval is symmetric in (u, v).  Semi weakly toll is the
#: exception: only the source endpoint carries the walk restriction.
SYMMETRIC_KINDS = frozenset(
    {IntervalKind.WEAKLY_TOLL, IntervalKind.TOLL, IntervalKind.MONOPHONIC, IntervalKind.GEODESIC}
)


def _split_components(adj: tuple[int, ...], kept: int) -> list[int]:
    """Component masks of the subgraph induced on the ``kept`` bitmask."""
    comps = []
    todo = kept
    while todo:
        seed = todo & -todo
        comp = seed
        while True:
            grown = comp
            for w in _bits(comp):
                grown |= adj[w] & kept
            if grown == comp:
                break
            comp = grown
        comps.append(comp)
        todo &= ~comp
    return comps


def _touch_tables(adj, comps, candidates: int):
    """For each candidate hub, which base components its neighbours touch.

    Returns two dicts keyed by hub vertex: a small bitmask over component
    indices, and the union of the touched components' vertex masks.
    """
    touch_idx = {}
    touch_mask = {}
    for y in _bits(candidates):
        idx = 0
        mask = 0
        for i, comp in enumerate(comps):
            if adj[y] & comp:
                idx |= 1 << i
                mask |= comp
        touch_idx[y] = idx
        touch_mask[y] = mask
    return touch_idx, touch_mask


def weakly_toll_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """All vertices lying on some weakly toll walk between u and v.

    For non-adjacent u, v the qualifying hub pairs (a, b) are either a
    common neighbour (a == b) or a pair with a adjacent to u but not to v
    and b adjacent to v but not to u; any other combination would put a
    second v-neighbour (or u-neighbour) on the walk.  Because hubs may
    repeat, a walk through a connected pair (a, b) can detour into every
    component touched by a or by b.
    """
    require_connected(graph, "weakly toll interval")
    graph._check_vertex(u)
    graph._check_vertex(v)
    n = graph.n
    if u == v:
        return VertexSet(n, 1 << u)
    adj = graph.adjacency_masks()
    if adj[u] >> v & 1:
        return VertexSet(n, 1 << u | 1 << v)

    nu, nv = adj[u], adj[v]
    kept = (1 << n) - 1 & ~(nu | nv | 1 << u | 1 << v)
    comps = _split_components(adj, kept)
    touch_idx, touch_mask = _touch_tables(adj, comps, nu | nv)

    result = 1 << u | 1 << v
    for a in _bits(nu & nv):
        result |= 1 << a | touch_mask[a]
    only_u = nu & ~nv & ~(1 << v)
    only_v = nv & ~nu & ~(1 << u)
    for a in _bits(only_u):
        for b in _bits(only_v):
            if adj[a] >> b & 1 or touch_idx[a] & touch_idx[b]:
                result |= 1 << a | 1 << b | touch_mask[a] | touch_mask[b]
    return VertexSet(n, result)


def semi_weakly_toll_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """All vertices on some semi weakly toll walk from source u to target v.

    Only the source side is restricted: with the first-step neighbour a
    fixed, the rest of the walk lives in G - (N[u] - {a}) and must reach v,
    so the answer is {u} plus the merged component of a and v whenever they
    meet.  When u and v are adjacent the source condition forces the first
    step onto v itself, which leaves {u} plus the component of v in
    G - (N[u] - {v}).
    """
    require_connected(graph, "semi weakly toll interval")
    graph._check_vertex(u)
    graph._check_vertex(v)
    n = graph.n
    if u == v:
        return VertexSet(n, 1 << u)
    adj = graph.adjacency_masks()
    kept = (1 << n) - 1 & ~(adj[u] | 1 << u)
    comps = _split_components(adj, kept)
    touch_idx, touch_mask = _touch_tables(adj, comps, adj[u])

    result = 1 << u
    if adj[u] >> v & 1:
        result |= 1 << v | touch_mask[v]
        return VertexSet(n, result)
    v_idx = next(1 << i for i, comp in enumerate(comps) if comp >> v & 1)
    for a in _bits(adj[u]):
        if touch_idx[a] & v_idx:
            result |= 1 << a | touch_mask[a]
    return VertexSet(n, result)


def toll_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """All vertices lying on some tolled walk between u and v.

    Hubs occur exactly once in a tolled walk, so a common neighbour
    contributes only itself, and an exclusive hub pair (a, b) reaches
    exactly the components touched by both ends (the walk enters the
    interior once and must leave it towards b).
    """
    require_connected(graph, "toll interval")
    graph._check_vertex(u)
    graph._check_vertex(v)
    n = graph.n
    if u == v:
        return VertexSet(n, 1 << u)
    adj = graph.adjacency_masks()
    if adj[u] >> v & 1:
        return VertexSet(n, 1 << u | 1 << v)

    nu, nv = adj[u], adj[v]
    kept = (1 << n) - 1 & ~(nu | nv | 1 << u | 1 << v)
    comps = _split_components(adj, kept)
    touch_idx, touch_mask = _touch_tables(adj, comps, nu | nv)

    result = 1 << u | 1 << v | nu & nv
    only_u = nu & ~nv & ~(1 << v)
    only_v = nv & ~nu & ~(1 << u)
    for a in _bits(only_u):
        for b in _bits(only_v):
            if adj[a] >> b & 1:
                result |= 1 << a | 1 << b
            shared = touch_idx[a] & touch_idx[b]
            if shared:
                result |= 1 << a | 1 << b
                for i in _bits(shared):
                    result |= comps[i]
    return VertexSet(n, result)


def _bfs_distances(adj: tuple[int, ...], n: int, source: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        grown = 0
        for w in _bits(frontier):
            grown |= adj[w]
        frontier = grown & ~seen
        seen |= frontier
        d += 1
        for w in _bits(frontier):
            dist[w] = d
    return dist


def geodesic_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """Union of all shortest u-v paths."""
    require_connected(graph, "geodesic interval")
    graph._check_vertex(u)
    graph._check_vertex(v)
    adj = graph.adjacency_masks()
    du = _bfs_distances(adj, graph.n, u)
    dv = _bfs_distances(adj, graph.n, v)
    d = du[v]
    mask = 0
    for x in range(graph.n):
        if du[x] + dv[x] == d:
            mask |= 1 << x
    return VertexSet(graph.n, mask)


def monophonic_interval(graph: Graph, u: int, v: int) -> VertexSet:
    """Union of all induced u-v paths, by depth-first enumeration."""
    require_connected(graph, "monophonic interval")
    graph._check_vertex(u)
    graph._check_vertex(v)
    n = graph.n
    if u == v:
        return VertexSet(n, 1 << u)
    adj = graph.adjacency_masks()
    result = 0

    def extend(last: int, path: int) -> None:
        nonlocal result
        if last == v:
            result |= path
            return
        for w in _bits(adj[last] & ~path):
            # keeping the path induced: w may touch only its predecessor
            if adj[w] & path & ~(1 << last):
                continue
            extend(w, path | 1 << w)

    extend(u, 1 << u)
    return VertexSet(n, result)


_DISPATCH = {
    IntervalKind.WEAKLY_TOLL: weakly_toll_interval,
    IntervalKind.SEMI_WEAKLY_TOLL: semi_weakly_toll_interval,
    IntervalKind.TOLL: toll_interval,
    IntervalKind.MONOPHONIC: monophonic_interval,
    IntervalKind.GEODESIC: geodesic_interval,
}


def interval(graph: Graph, u: int, v: int, kind: IntervalKind) -> VertexSet:
    return _DISPATCH[IntervalKind(kind)](graph, u, v)


def interval_closure(graph: Graph, subset: VertexSet, kind: IntervalKind) -> VertexSet:
    """Union of the pairwise intervals over the subset (one closure step).

    Unordered pairs suffice for the symmetric kinds; the semi weakly toll
    closure takes both orders.  Diagonal pairs contribute the singletons, so
    the subset itself is always contained in the result.
    """
    kind = IntervalKind(kind)
    if subset.n != graph.n:
        raise ValueError("subset belongs to a different vertex range")
    members = list(subset)
    mask = subset.mask
    fn = _DISPATCH[kind]
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            mask |= fn(graph, u, v).mask
            if kind not in SYMMETRIC_KINDS:
                mask |= fn(graph, v, u).mask
    return VertexSet(graph.n, mask)


def is_weakly_toll_set(graph: Graph, subset: VertexSet) -> bool:
    """Whether the pairwise weakly toll intervals of the subset cover V."""
    return interval_closure(graph, subset, IntervalKind.WEAKLY_TOLL) == VertexSet.full(graph.n)
