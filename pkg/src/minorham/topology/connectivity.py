"""Vertex connectivity via unit-capacity disjoint-path search (Menger)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .._accel import kernel
from ..graph import Graph, connected_components, delete_edge


@kernel
def _augment(cap, src, dst, parent, queue):
    """One BFS augmenting step on the split-vertex residual network."""
    size = cap.shape[0]
    for i in range(size):
        parent[i] = -1
    parent[src] = src
    head = 0
    tail = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        a = queue[head]
        head += 1
        for b in range(size):
            if cap[a, b] > 0 and parent[b] < 0:
                parent[b] = a
                if b == dst:
                    x = dst
                    while x != src:
                        p = parent[x]
                        cap[p, x] -= 1
                        cap[x, p] += 1
                        x = p
                    return True
                queue[tail] = b
                tail += 1
    return False


@kernel
def _flow_network(masks, s, t):
    n = masks.shape[0]
    cap = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for v in range(n):
        cap[2 * v, 2 * v + 1] = n if (v == s or v == t) else 1
        nb = masks[v]
        for w in range(n):
            if (nb >> w) & 1:
                cap[2 * v + 1, 2 * w] = 1
    return cap


@kernel
def local_connectivity(masks, s, t, limit):
    """Number of internally disjoint s-t paths in the graph minus edge st, capped at ``limit``."""
    n = masks.shape[0]
    cap = _flow_network(masks, s, t)
    cap[2 * s + 1, 2 * t] = 0
    cap[2 * t + 1, 2 * s] = 0
    parent = np.empty(2 * n, dtype=np.int64)
    queue = np.empty(2 * n, dtype=np.int64)
    flow = 0
    while flow < limit and _augment(cap, 2 * s + 1, 2 * t, parent, queue):
        flow += 1
    return flow


@kernel
def connectivity_kernel(masks, limit):
    """min(vertex connectivity, limit); complete graphs report n - 1."""
    n = masks.shape[0]
    best = n - 1
    if limit < best:
        best = limit
    for s in range(n):
        for t in range(s + 1, n):
            if (masks[s] >> t) & 1:
                continue
            k = local_connectivity(masks, s, t, best)
            if k < best:
                best = k
                if best == 0:
                    return 0
    return best


@kernel
def deletable_edges_3c(masks):
    """Edges uv (u < v) of a 3-connected graph whose removal keeps it 3-connected.

    With G 3-connected, any 2-cut of G - uv separates u from v, so three
    internally disjoint u-v paths in G - uv decide the question.
    """
    n = masks.shape[0]
    out = np.empty((n * n, 2), dtype=np.int64)
    cnt = 0
    for u in range(n):
        for v in range(u + 1, n):
            if (masks[u] >> v) & 1:
                if local_connectivity(masks, u, v, 3) >= 3:
                    out[cnt, 0] = u
                    out[cnt, 1] = v
                    cnt += 1
    return out[:cnt]


def vertex_connectivity(g: Graph, limit: int | None = None) -> int:
    """Exact vertex connectivity (or ``min(kappa, limit)`` when a limit is given)."""
    if g.n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if g.n > 1 and len(connected_components(g)) > 1:
        return 0
    return int(connectivity_kernel(g.masks, g.n if limit is None else limit))


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    return vertex_connectivity(g, k) >= k


def is_3_connected(g: Graph) -> bool:
    return is_k_connected(g, 3)


def is_block(g: Graph) -> bool:
    """Connected with no cutvertex (so K1 and K2 count)."""
    if g.n <= 1:
        return True
    if len(connected_components(g)) != 1:
        return False
    return all(len(connected_components(g, (v,))) <= 1 for v in range(g.n))


@dataclass(frozen=True)
class DisjointPaths:
    paths: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.paths)


def _flow_paths(g: Graph, s: int, t: int, want: int) -> list[list[int]]:
    masks = g.masks
    n = g.n
    cap = _flow_network(masks, s, t)
    cap[2 * s + 1, 2 * t] = 0
    cap[2 * t + 1, 2 * s] = 0
    base = cap.copy()
    parent = np.empty(2 * n, dtype=np.int64)
    queue = np.empty(2 * n, dtype=np.int64)
    flow = 0
    while flow < want and _augment(cap, 2 * s + 1, 2 * t, parent, queue):
        flow += 1
    used = base - cap  # positive entries carry flow
    paths = []
    for _ in range(flow):
        path = [s]
        node = 2 * s + 1
        while True:
            nxt = next(b for b in range(2 * n) if used[node, b] > 0 and b % 2 == 0)
            used[node, nxt] -= 1
            v = nxt // 2
            path.append(v)
            if v == t:
                break
            used[nxt, nxt + 1] -= 1
            node = nxt + 1
        paths.append(path)
    return paths


def _search_long_paths(g: Graph, x: int, y: int, k: int, min_len: int) -> list[list[int]] | None:
    candidates: list[list[int]] = []

    def walk(path: list[int], seen: set[int]):
        u = path[-1]
        for w in g.adj[u]:
            if w == y:
                if len(path) >= min_len:
                    candidates.append(path + [y])
            elif w not in seen:
                seen.add(w)
                path.append(w)
                walk(path, seen)
                path.pop()
                seen.discard(w)

    walk([x], {x})
    candidates.sort(key=lambda p: (len(p), p))
    inner = [frozenset(p[1:-1]) for p in candidates]

    def pick(start: int, chosen: list[int], blocked: frozenset[int]):
        if len(chosen) == k:
            return chosen
        for i in range(start, len(candidates)):
            if inner[i].isdisjoint(blocked):
                found = pick(i + 1, chosen + [i], blocked | inner[i])
                if found:
                    return found
        return None

    sel = pick(0, [], frozenset())
    return None if sel is None else [candidates[i] for i in sel]


def internally_disjoint_paths(g: Graph, x: int, y: int, k: int, min_len: int = 1) -> DisjointPaths | None:
    """k internally disjoint x-y paths with at least ``min_len`` edges each, or None."""
    if x == y:
        raise ValueError("endpoints must differ")
    if k <= 0:
        return DisjointPaths(())
    if min_len <= 2:
        direct = g.has_edge(x, y) and min_len <= 1
        h = delete_edge(g, (x, y)) if g.has_edge(x, y) else g
        need = k - 1 if direct else k
        paths = _flow_paths(h, x, y, need) if need > 0 else []
        if len(paths) < need:
            return None
        if direct:
            paths = [[x, y]] + paths
    else:
        paths = _search_long_paths(g, x, y, k, min_len)
        if paths is None:
            return None
    paths.sort(key=lambda p: (len(p), p))
    return DisjointPaths(tuple(tuple(p) for p in paths))


def brute_force_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g (test oracle)."""
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            if len(connected_components(g, cut)) > 1:
                return size
    return g.n - 1
