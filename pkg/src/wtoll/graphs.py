"""Immutable simple undirected graphs with dense integer vertex ids.

Vertices are always 0..n-1.  Adjacency is stored as one bitmask per vertex,
which keeps neighbourhood and component queries cheap for the graph sizes
this toolkit targets (factors up to ~10 vertices, products up to ~60).
Graphs never change after construction, so they can be shared freely.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence


class DisconnectedGraphError(ValueError):
    """Raised by operations that are only defined on connected graphs."""


class TrivialGraphError(ValueError):
    """Raised by operations that need at least two vertices."""


class CompleteGraphError(ValueError):
    """Raised by operations that are only defined on non-complete graphs."""


class Graph6FormatError(ValueError):
    """Raised for malformed graph6 input."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """An immutable subset of the vertices 0..n-1, backed by a bitmask."""

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise ValueError(f"mask {mask:#x} not within 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError("vertex sets belong to different vertex ranges")

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def isdisjoint(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & other.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & (1 << self.n) - 1)

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}} of {self.n})"


class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Construct through :meth:`from_edge_list`, the generators below, or the
    graph6 / edge-list parsers.  Self-loops are rejected, duplicate edges
    collapse, and adjacency is stored symmetrically.
    """

    __slots__ = ("n", "_adj", "names")

    def __init__(self, adj: Sequence[int], names: Sequence[str] | None = None):
        n = len(adj)
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        full = (1 << n) - 1
        for v, mask in enumerate(adj):
            if mask & ~full:
                raise ValueError(f"adjacency of {v} mentions vertices >= {n}")
            if mask >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, mask in enumerate(adj):
            for w in _bits(mask):
                if adj[w] >> v & 1 == 0:
                    raise ValueError(f"asymmetric adjacency between {v} and {w}")
        if names is not None and len(names) != n:
            raise ValueError("names must match the vertex count")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj))
        object.__setattr__(self, "names", tuple(names) if names is not None else None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edge_list(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        names: Sequence[str] | None = None,
    ) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {u}) not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj, names)

    # -- basic queries -------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbour bitmasks, indexed by vertex (shared, do not mutate)."""
        return self._adj

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return self._adj[u] >> v & 1 == 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self._adj[v])

    def closed_neighborhood(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self._adj[v] | 1 << v)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def name_of(self, v: int) -> str:
        self._check_vertex(v)
        return self.names[v] if self.names is not None else str(v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    # -- structure -----------------------------------------------------

    def connected_components(self) -> list[VertexSet]:
        """Components as vertex sets, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            while True:
                grown = comp
                for w in _bits(comp):
                    grown |= self._adj[w]
                if grown == comp:
                    break
                comp = grown
            seen |= comp
            out.append(VertexSet(self.n, comp))
        return out

    def is_connected(self) -> bool:
        return len(self.connected_components()) == 1

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def delete_vertices(self, removed: VertexSet | Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on the remaining vertices.

        Returns ``(subgraph, kept)`` where ``kept[new_id] == old_id``; the
        inverse map is ``{old: new for new, old in enumerate(kept)}``.
        """
        if not isinstance(removed, VertexSet):
            removed = VertexSet.from_iterable(self.n, removed)
        elif removed.n != self.n:
            raise ValueError("vertex set belongs to a different graph size")
        kept = tuple(v for v in range(self.n) if v not in removed)
        if not kept:
            raise ValueError("cannot delete every vertex")
        index = {old: new for new, old in enumerate(kept)}
        adj = [0] * len(kept)
        for new, old in enumerate(kept):
            for w in _bits(self._adj[old] & ~removed.mask):
                adj[new] |= 1 << index[w]
        names = tuple(self.name_of(v) for v in kept) if self.names is not None else None
        return Graph(adj, names), kept

    def with_names(self, names: Sequence[str]) -> "Graph":
        return Graph(self._adj, names)

    # -- equality is structural; display names do not participate ------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


# -- precondition guards ----------------------------------------------


def require_connected(graph: Graph, what: str = "operation") -> None:
    if not graph.is_connected():
        raise DisconnectedGraphError(f"{what} requires a connected graph")


def require_non_trivial(graph: Graph, what: str = "operation") -> None:
    if graph.n < 2:
        raise TrivialGraphError(f"{what} requires at least two vertices")


def require_non_complete(graph: Graph, what: str = "operation") -> None:
    if graph.is_complete():
        raise CompleteGraphError(f"{what} requires a non-complete graph")


# -- generators --------------------------------------------------------


def path_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    if k < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph.from_edge_list(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def star_graph(k: int) -> Graph:
    """Star with centre 0 and leaves 1..k (so ``star_graph(3)`` is K_{1,3})."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def two_clique_bridge(k: int) -> Graph:
    """Two k-cliques whose first vertices are joined through a middle vertex.

    Vertices: clique A is 0..k-1, clique B is k..2k-1, the middle vertex is
    2k, and the only inter-clique edges are 0--2k and k--2k.
    """
    if k < 1:
        raise ValueError("clique size must be positive")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(k + i, k + j) for i in range(k) for j in range(i + 1, k)]
    edges += [(0, 2 * k), (k, 2 * k)]
    return Graph.from_edge_list(2 * k + 1, edges)


def random_tree(k: int, seed: int) -> Graph:
    """Uniform-attachment random tree on k vertices, deterministic per seed."""
    if k < 1:
        raise ValueError("tree needs at least one vertex")
    rng = random.Random(seed)
    return Graph.from_edge_list(k, [(rng.randrange(i), i) for i in range(1, k)])


def random_connected_graph(k: int, p: float, seed: int) -> Graph:
    """G(k, p) sample augmented with random inter-component edges until connected."""
    if k < 1:
        raise ValueError("graph needs at least one vertex")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < p]
    graph = Graph.from_edge_list(k, edges)
    while not graph.is_connected():
        comps = graph.connected_components()
        a, b = rng.sample(range(len(comps)), 2)
        u = rng.choice(sorted(comps[a]))
        v = rng.choice(sorted(comps[b]))
        edges.append((u, v))
        graph = Graph.from_edge_list(k, edges)
    return graph


# -- graph6 (short form, n <= 62) ---------------------------------------

_G6_HEADER = ">>graph6<<"


def encode_graph6(graph: Graph) -> str:
    """Standard short-form graph6 string (no header, no newline)."""
    n = graph.n
    if n > 62:
        raise Graph6FormatError("short-form graph6 covers at most 62 vertices")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if graph.adjacent(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + n)]
    for off in range(0, len(bits), 6):
        group = 0
        for b in bits[off : off + 6]:
            group = group << 1 | b
        chars.append(chr(63 + group))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 record (optionally with the format header)."""
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER) :]
    if not data:
        raise Graph6FormatError("empty graph6 record")
    n = ord(data[0]) - 63
    if not 1 <= n <= 62:
        raise Graph6FormatError(f"unsupported vertex count byte {data[0]!r}")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[1:]
    if len(body) != need:
        raise Graph6FormatError(f"expected {need} data bytes for n={n}, got {len(body)}")
    bits = []
    for ch in body:
        group = ord(ch) - 63
        if not 0 <= group < 64:
            raise Graph6FormatError(f"byte {ch!r} outside graph6 alphabet")
        bits.extend(group >> shift & 1 for shift in range(5, -1, -1))
    count = n * (n - 1) // 2
    if any(bits[count:]):
        raise Graph6FormatError("nonzero padding bits")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edge_list(n, edges)


# -- plain edge-list text ("n m" header then one "u v" line per edge) ----


def encode_edge_list(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count}"]
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge-list text must start with a 'n m' line")
    n, m = (int(tok) for tok in rows[0])
    if len(rows) - 1 != m:
        raise ValueError(f"header announces {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for row in rows[1:]:
        if len(row) != 2:
            raise ValueError(f"malformed edge line {' '.join(row)!r}")
        edges.append((int(row[0]), int(row[1])))
    return Graph.from_edge_list(n, edges)
