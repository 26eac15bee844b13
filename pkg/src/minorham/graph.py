"""Immutable simple graphs with dense vertex ids and structural edits."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]


class GraphError(ValueError):
    """Rejected graph construction or edit."""

    def __init__(self, message: str, pair: Edge | None = None):
        super().__init__(message)
        self.pair = pair


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are treated as values: edits return new graphs, and equality
    compares structure only (labels are annotations).
    """

    __slots__ = ("n", "adj", "labels", "_masks", "_matrix", "_edges")

    def __init__(self, n: int, adj: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self.labels = tuple(labels) if labels is not None else None
        self._masks = None
        self._matrix = None
        self._edges = None

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[Edge]:
        if self._edges is None:
            self._edges = [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]
        return list(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adj[u]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, name: str) -> int:
        """Vertex id carrying label ``name``."""
        if self.labels is None:
            return int(name)
        return self.labels.index(name)

    @property
    def masks(self) -> np.ndarray:
        """Neighbourhood bitmasks (int64), the input format of the kernels."""
        if self._masks is None:
            if self.n > 62:
                raise GraphError("bitmask kernels support at most 62 vertices")
            out = np.zeros(self.n, dtype=np.int64)
            for u, a in enumerate(self.adj):
                bits = 0
                for v in a:
                    bits |= 1 << v
                out[u] = bits
            self._masks = out
        return self._masks

    @property
    def matrix(self) -> np.ndarray:
        if self._matrix is None:
            mat = np.zeros((self.n, self.n), dtype=np.uint8)
            for u, a in enumerate(self.adj):
                for v in a:
                    mat[u, v] = 1
            self._matrix = mat
        return self._matrix


def build_graph(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if labels is not None and len(labels) != n:
        raise GraphError(f"expected {n} labels, got {len(labels)}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"endpoint out of range in ({u}, {v}) for n={n}", (u, v))
        if u == v:
            raise GraphError(f"loop at vertex {u}", (u, v))
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj, labels)


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _check_edge(g: Graph, e: Sequence[int]) -> Edge:
    u, v = int(e[0]), int(e[1])
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge", (u, v))
    return u, v


def contract_set(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Merge ``vertices`` into one vertex (no connectivity check).

    Returns the new graph and ``id_map[old] = new``.  Surviving vertices keep
    their relative order; the merged vertex takes the position and label of
    the smallest member.
    """
    group = sorted(set(vertices))
    if not group:
        raise GraphError("cannot contract an empty set")
    rep = group[0]
    members = set(group)
    id_map = [0] * g.n
    nxt = 0
    for v in range(g.n):
        if v in members and v != rep:
            continue
        id_map[v] = nxt
        nxt += 1
    for v in group:
        id_map[v] = id_map[rep]
    adj: list[set[int]] = [set() for _ in range(nxt)]
    for u, v in g.edges():
        a, b = id_map[u], id_map[v]
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    labels = None
    if g.labels is not None:
        labels = [g.labels[v] for v in range(g.n) if v not in members or v == rep]
    return Graph(nxt, adj, labels), id_map


def contract_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _check_edge(g, e)
    return contract_set(g, (u, v))[0]


def delete_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = _check_edge(g, e)
    adj = [set(a) for a in g.adj]
    adj[u].discard(v)
    adj[v].discard(u)
    return Graph(g.n, adj, g.labels)


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = int(e[0]), int(e[1])
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"cannot add ({u}, {v})", (u, v))
    adj = [set(a) for a in g.adj]
    adj[u].add(v)
    adj[v].add(u)
    return Graph(g.n, adj, g.labels)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``vertices``; returns it with ``kept[new] = old``."""
    kept = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(kept)}
    adj = [[pos[w] for w in g.adj[v] if w in pos] for v in kept]
    labels = [g.labels[v] for v in kept] if g.labels is not None else None
    return Graph(len(kept), adj, labels), kept


def delete_vertices(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    gone = set(vertices)
    return induced_subgraph(g, (v for v in range(g.n) if v not in gone))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        adj[perm[v]] = [perm[w] for w in g.adj[v]]
    labels = None
    if g.labels is not None:
        labels = [""] * g.n
        for v in range(g.n):
            labels[perm[v]] = g.labels[v]
    return Graph(g.n, adj, labels)


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Components of ``g - removed`` ordered by smallest member."""
    gone = set(removed)
    seen = set(gone)
    comps = []
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def shortest_path(g: Graph, sources: Iterable[int], targets: Iterable[int], within: Iterable[int] | None = None) -> list[int] | None:
    """BFS path from any source to any target, optionally confined to ``within``."""
    allowed = None if within is None else set(within)
    tgt = set(targets)
    parent: dict[int, int] = {}
    queue = deque()
    for s in sources:
        if allowed is None or s in allowed:
            parent[s] = -1
            queue.append(s)
    while queue:
        u = queue.popleft()
        if u in tgt:
            path = [u]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in g.adj[u]:
            if w not in parent and (allowed is None or w in allowed):
                parent[w] = u
                queue.append(w)
    return None


def graph_from_masks(masks: Sequence[int]) -> Graph:
    """Inverse of :attr:`Graph.masks`."""
    n = len(masks)
    adj = []
    for u in range(n):
        m = int(masks[u])
        adj.append([v for v in range(n) if m >> v & 1])
    return Graph(n, adj)
