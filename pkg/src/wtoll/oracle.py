"""Brute-force reference implementations of the walk intervals.

Everything here works directly from the walk definitions and is kept
deliberately independent of the closed-form engines in ``intervals``: the
adjacency structure is rebuilt as plain neighbour sets and the walk
conditions are restated from scratch.  These oracles exist to catch any
mistake in the derived characterisations, so they favour obviousness over
speed and are only meant for graphs with up to roughly eight vertices
(``oracle_interval`` itself copes with a few dozen).

Exhaustive walk enumeration is exponential, so ``oracle_interval`` explores
a memoised state space instead of raw vertex sequences.  The memoisation
key is sound because the walk constraints become per-vertex checks once the
hub vertices are fixed: for a weakly toll walk, after the first step every
appended vertex adjacent to u must equal the first hub, and all vertices
adjacent to v seen anywhere must agree on a single vertex, which must also
immediately precede the final v.  ``enumerated_interval`` re-derives the
same sets by literal depth-first sequence enumeration (no memoisation) and
the tests keep the two in agreement on tiny graphs.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .graphs import Graph, VertexSet, require_connected, require_non_trivial
from .intervals import IntervalKind

ORACLE_KINDS = (IntervalKind.WEAKLY_TOLL, IntervalKind.SEMI_WEAKLY_TOLL, IntervalKind.TOLL)


@dataclass(frozen=True)
class WalkBudget:
    """Maximum number of edges in enumerated walks."""

    max_len: int

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError("walk budget must allow at least one edge")


def default_budget(graph: Graph) -> WalkBudget:
    """2n + 2 edges: an interval witness decomposes into two walks of at
    most n - 1 edges through the interior plus endpoint detours."""
    return WalkBudget(2 * graph.n + 2)


def _neighbour_sets(graph: Graph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(graph.n)]
    for a, b in graph.edges():
        adj[a].add(b)
        adj[b].add(a)
    return adj


# -- verbatim walk validity --------------------------------------------


def is_weakly_toll_walk(graph: Graph, walk: list[int], u: int, v: int) -> bool:
    """Check the three defining conditions of a weakly toll walk as stated."""
    adj = _neighbour_sets(graph)
    if not walk or walk[0] != u or walk[-1] != v:
        return False
    k = len(walk) - 1
    if k == 0:
        return True
    if any(walk[i + 1] not in adj[walk[i]] for i in range(k)):
        return False
    if any(walk[i] in adj[u] and walk[i] != walk[1] for i in range(1, k + 1)):
        return False
    if any(v in adj[walk[i]] and walk[i] != walk[k - 1] for i in range(k)):
        return False
    return True


def is_semi_weakly_toll_walk(graph: Graph, walk: list[int], u: int, v: int) -> bool:
    """Like the weakly toll conditions but restricted to the source side."""
    adj = _neighbour_sets(graph)
    if not walk or walk[0] != u or walk[-1] != v:
        return False
    k = len(walk) - 1
    if k == 0:
        return True
    if any(walk[i + 1] not in adj[walk[i]] for i in range(k)):
        return False
    return not any(walk[i] in adj[u] and walk[i] != walk[1] for i in range(1, k + 1))


def is_tolled_walk(graph: Graph, walk: list[int], u: int, v: int) -> bool:
    """Positional form: w_i is adjacent to u iff i == 1, and to v iff i == k-1."""
    adj = _neighbour_sets(graph)
    if not walk or walk[0] != u or walk[-1] != v:
        return False
    k = len(walk) - 1
    if k == 0:
        return True
    if any(walk[i + 1] not in adj[walk[i]] for i in range(k)):
        return False
    if any((walk[i] in adj[u]) != (i == 1) for i in range(1, k + 1)):
        return False
    return not any((walk[i] in adj[v]) != (i == k - 1) for i in range(k))


_CHECKERS = {
    IntervalKind.WEAKLY_TOLL: is_weakly_toll_walk,
    IntervalKind.SEMI_WEAKLY_TOLL: is_semi_weakly_toll_walk,
    IntervalKind.TOLL: is_tolled_walk,
}


# -- memoised walk-state search -----------------------------------------


def _state_interval(starts, transitions, finished, budget: int, n: int, u: int, v: int) -> int:
    """Shared scaffolding: min edges to reach each state (forward) and to
    complete a walk from it (backward); a vertex is marked when some state
    splits a valid walk within budget."""
    fwd: dict = {}
    preds: dict = {}
    queue = deque()
    for state in starts:
        if state not in fwd:
            fwd[state] = 1
            queue.append(state)
    while queue:
        state = queue.popleft()
        d = fwd[state]
        if d >= budget:
            continue
        for nxt in transitions(state):
            preds.setdefault(nxt, []).append(state)
            if nxt not in fwd:
                fwd[nxt] = d + 1
                queue.append(nxt)

    bwd: dict = {}
    queue = deque()
    for state, extra in finished(fwd):
        if bwd.get(state, budget + 1) > extra:
            bwd[state] = extra
            queue.append(state)
    while queue:
        state = queue.popleft()
        d = bwd[state]
        for prev in preds.get(state, ()):
            if prev not in bwd:
                bwd[prev] = d + 1
                queue.append(prev)

    mask = 0
    complete = False
    for state, d in fwd.items():
        back = bwd.get(state)
        if back is not None and d + back <= budget:
            mask |= 1 << state[0]
            complete = True
    if complete:
        mask |= 1 << u | 1 << v
    return mask


def _weakly_toll_mask(adj: list[set[int]], n: int, u: int, v: int, budget: int) -> int:
    nu, nv = adj[u], adj[v]
    b0 = u if u in nv else -1

    def step(cur: int, a: int, b: int):
        for w in adj[cur]:
            if w in nu and w != a:
                continue
            if w in nv:
                if b == -1:
                    yield (w, a, w)
                elif b == w:
                    yield (w, a, b)
            else:
                yield (w, a, b)

    starts = []
    for a in sorted(nu):
        if a in nv and b0 not in (-1, a):
            continue
        starts.append((a, a, (a if a in nv else b0)))

    def transitions(state):
        return step(*state)

    def finished(fwd):
        return [(state, 0) for state in fwd if state[0] == v]

    return _state_interval(starts, transitions, finished, budget, n, u, v)


def _semi_weakly_toll_mask(adj: list[set[int]], n: int, u: int, v: int, budget: int) -> int:
    nu = adj[u]

    def transitions(state):
        cur, a = state
        for w in adj[cur]:
            if w in nu and w != a:
                continue
            yield (w, a)

    starts = [(a, a) for a in sorted(nu)]

    def finished(fwd):
        return [(state, 0) for state in fwd if state[0] == v]

    return _state_interval(starts, transitions, finished, budget, n, u, v)


def _toll_mask(adj: list[set[int]], n: int, u: int, v: int, budget: int) -> int:
    nu, nv = adj[u], adj[v]
    if v in nu:
        # a longer walk would place v at a position other than 1 while v is
        # adjacent to the start, violating the positional condition
        return (1 << u | 1 << v) if budget >= 1 else 0
    MID, LAST = 0, 1

    def transitions(state):
        cur, stage = state
        if stage == LAST:
            return
        for w in adj[cur]:
            if w in nu or w == u:
                continue
            yield (w, LAST if w in nv else MID)

    starts = [(a, LAST if a in nv else MID) for a in sorted(nu)]

    def finished(fwd):
        # one more edge hops from the penultimate vertex onto v
        return [(state, 1) for state in fwd if state[1] == LAST]

    return _state_interval(starts, transitions, finished, budget, n, u, v)


_BUILDERS = {
    IntervalKind.WEAKLY_TOLL: _weakly_toll_mask,
    IntervalKind.SEMI_WEAKLY_TOLL: _semi_weakly_toll_mask,
    IntervalKind.TOLL: _toll_mask,
}


def _as_budget(graph: Graph, budget: WalkBudget | int | None) -> int:
    if budget is None:
        return default_budget(graph).max_len
    if isinstance(budget, WalkBudget):
        return budget.max_len
    return WalkBudget(budget).max_len


def oracle_interval(
    graph: Graph,
    u: int,
    v: int,
    kind: IntervalKind,
    budget: WalkBudget | int | None = None,
) -> VertexSet:
    """Vertices visited by some qualifying walk of at most ``budget`` edges."""
    kind = IntervalKind(kind)
    if kind not in _BUILDERS:
        raise ValueError(f"no walk oracle for interval kind {kind.value!r}")
    require_connected(graph, "walk oracle")
    graph._check_vertex(u)
    graph._check_vertex(v)
    max_len = _as_budget(graph, budget)
    if u == v:
        return VertexSet(graph.n, 1 << u)
    adj = _neighbour_sets(graph)
    return VertexSet(graph.n, _BUILDERS[kind](adj, graph.n, u, v, max_len))


def enumerated_interval(
    graph: Graph,
    u: int,
    v: int,
    kind: IntervalKind,
    budget: WalkBudget | int | None = None,
) -> VertexSet:
    """Unmemoised ground truth: depth-first over raw vertex sequences.

    Every extension keeps only the walk-edge constraint; full sequences
    ending at v are validated with the verbatim condition checkers.  Cost
    grows like degree**budget, so keep this to tiny graphs.
    """
    kind = IntervalKind(kind)
    checker = _CHECKERS[kind]
    require_connected(graph, "walk enumeration")
    graph._check_vertex(u)
    graph._check_vertex(v)
    max_len = _as_budget(graph, budget)
    if u == v:
        return VertexSet(graph.n, 1 << u)
    adj = _neighbour_sets(graph)
    mask = 0
    walk = [u]

    def extend() -> None:
        nonlocal mask
        if walk[-1] == v and checker(graph, walk, u, v):
            for x in walk:
                mask |= 1 << x
        if len(walk) > max_len:
            return
        for w in sorted(adj[walk[-1]]):
            walk.append(w)
            extend()
            walk.pop()

    extend()
    return VertexSet(graph.n, mask)


# -- exact minima by subset search --------------------------------------


def _pair_masks(graph: Graph, budget: WalkBudget | int | None) -> dict[tuple[int, int], int]:
    masks = {}
    for u in range(graph.n):
        for v in range(u + 1, graph.n):
            masks[u, v] = oracle_interval(graph, u, v, IntervalKind.WEAKLY_TOLL, budget).mask
    return masks


def oracle_wtn(graph: Graph, budget: WalkBudget | int | None = None) -> tuple[int, VertexSet]:
    """Exact weakly toll number with the lexicographically least witness."""
    require_connected(graph, "weakly toll number")
    require_non_trivial(graph, "weakly toll number")
    full = (1 << graph.n) - 1
    pair = _pair_masks(graph, budget)
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


def oracle_wth(graph: Graph, budget: WalkBudget | int | None = None) -> tuple[int, VertexSet]:
    """Exact weakly toll hull number with the lexicographically least witness."""
    require_connected(graph, "weakly toll hull number")
    require_non_trivial(graph, "weakly toll hull number")
    full = (1 << graph.n) - 1
    pair = _pair_masks(graph, budget)

    def hull_mask(start: int) -> int:
        current = start
        while True:
            grown = current
            members = [x for x in range(graph.n) if current >> x & 1]
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
