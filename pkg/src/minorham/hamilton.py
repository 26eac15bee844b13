"""Hamilton cycles, longest cycles, toughness cuts and outerplanar Hamilton paths."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

import numpy as np

from ._accel import kernel, popcount
from .graph import Graph, GraphError, add_edge, connected_components
from .topology.connectivity import is_block
from .topology.outerplanar import outer_cycle, xy_outerplanar_embedding


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(min(vs[i], vs[i - 1]), max(vs[i], vs[i - 1])) for i in range(len(vs))]

    def is_valid(self, g: Graph) -> bool:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            return False
        return all(g.has_edge(vs[i - 1], vs[i]) for i in range(len(vs)))


@dataclass(frozen=True)
class HamPath:
    vertices: tuple[int, ...]
    terminal_degree: int

    @property
    def terminal(self) -> int:
        return self.vertices[-1]

    def is_path_of(self, g: Graph) -> bool:
        vs = self.vertices
        return len(set(vs)) == len(vs) and all(g.has_edge(vs[i - 1], vs[i]) for i in range(1, len(vs)))


@dataclass(frozen=True)
class ToughnessCut:
    cut: frozenset[int]
    component_count: int


@dataclass(frozen=True)
class Exhaustion:
    """Outcome of a negative exact search: nodes visited and a transcript hash."""

    nodes: int
    transcript: int


@kernel
def _unvisited_ok(masks, visited, start, end):
    n = masks.shape[0]
    full = (np.int64(1) << n) - 1
    free = full & ~visited
    if free == 0:
        return True
    ends = (np.int64(1) << start) | (np.int64(1) << end)
    rem = free
    while rem:
        low = rem & -rem
        rem &= ~low
        u = 0
        while (low >> u) != 1:
            u += 1
        if popcount(masks[u] & (free | ends)) < 2:
            return False
    # the unvisited vertices must induce a connected subgraph
    low = free & -free
    reach = low
    frontier = low
    while frontier:
        nxt = np.int64(0)
        while frontier:
            b = frontier & -frontier
            frontier &= ~b
            u = 0
            while (b >> u) != 1:
                u += 1
            nxt |= masks[u] & free
        nxt &= ~reach
        reach |= nxt
        frontier = nxt
    return reach == free


@kernel
def ham_cycle_search(masks):
    """Backtracking Hamilton cycle search. Returns (found, order, nodes, transcript)."""
    n = masks.shape[0]
    path = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    start = 0
    for v in range(n):
        if popcount(masks[v]) < popcount(masks[start]):
            start = v
    path[0] = start
    visited = np.int64(1) << start
    cand[0] = masks[start]
    depth = 0
    nodes = 0
    transcript = 0
    modulus = 1000000007
    while depth >= 0:
        if cand[depth] == 0:
            visited &= ~(np.int64(1) << path[depth])
            depth -= 1
            continue
        low = cand[depth] & -cand[depth]
        cand[depth] &= ~low
        v = 0
        while (low >> v) != 1:
            v += 1
        if depth >= 1 and depth == n - 2 and v < path[1]:
            continue
        nodes += 1
        transcript = (transcript * 131 + v + 1) % modulus
        depth += 1
        path[depth] = v
        visited |= low
        if depth == n - 1:
            if (masks[v] >> start) & 1:
                return True, path, nodes, transcript
            visited &= ~low
            depth -= 1
            continue
        if not _unvisited_ok(masks, visited, start, v):
            visited &= ~low
            depth -= 1
            continue
        cand[depth] = masks[v] & ~visited
    return False, path, nodes, transcript


@kernel
def longest_cycle_search(masks):
    """Exact circumference by depth-first search over cycles rooted at their minimum vertex."""
    n = masks.shape[0]
    best = 0
    best_path = np.zeros(n, dtype=np.int64)
    path = np.zeros(n, dtype=np.int64)
    cand = np.zeros(n, dtype=np.int64)
    for s in range(n):
        if n - s <= best:
            break
        above = ~((np.int64(1) << (s + 1)) - 1) & ((np.int64(1) << n) - 1)
        path[0] = s
        visited = np.int64(1) << s
        cand[0] = masks[s] & above
        depth = 0
        while depth >= 0:
            if cand[depth] == 0:
                visited &= ~(np.int64(1) << path[depth])
                depth -= 1
                continue
            low = cand[depth] & -cand[depth]
            cand[depth] &= ~low
            v = 0
            while (low >> v) != 1:
                v += 1
            depth += 1
            path[depth] = v
            visited |= low
            length = depth + 1
            if length >= 3 and (masks[v] >> s) & 1 and length > best:
                best = length
                best_path[:] = path
                if best == n:
                    return best, best_path
            free = above & ~visited
            reach = np.int64(0)
            frontier = masks[v] & free
            while frontier:
                reach |= frontier
                nxt = np.int64(0)
                f = frontier
                while f:
                    b = f & -f
                    f &= ~b
                    u = 0
                    while (b >> u) != 1:
                        u += 1
                    nxt |= masks[u] & free
                frontier = nxt & ~reach
            if length + popcount(reach) <= best:
                visited &= ~low
                depth -= 1
                continue
            cand[depth] = masks[v] & free
    return best, best_path


def hamilton_search(g: Graph) -> tuple[Cycle | None, Exhaustion]:
    if g.n < 3:
        raise GraphError("Hamilton cycles need at least 3 vertices")
    if len(connected_components(g)) > 1 or min(g.degrees()) < 2:
        return None, Exhaustion(0, 0)
    found, order, nodes, transcript = ham_cycle_search(g.masks)
    if found:
        return Cycle(tuple(int(v) for v in order)), Exhaustion(int(nodes), int(transcript))
    return None, Exhaustion(int(nodes), int(transcript))


def hamilton_cycle(g: Graph) -> Cycle | None:
    """A Hamilton cycle, or None after exhausting the search."""
    return hamilton_search(g)[0]


def is_hamiltonian(g: Graph) -> bool:
    return hamilton_cycle(g) is not None


def longest_cycle(g: Graph) -> Cycle | None:
    """A longest cycle (None for forests)."""
    if g.n < 3:
        return None
    best, path = longest_cycle_search(g.masks)
    if best == 0:
        return None
    return Cycle(tuple(int(v) for v in path[:best]))


def iter_cycles(g: Graph) -> Iterator[Cycle]:
    """Every cycle once: smallest vertex first, second vertex below the last."""
    for s in range(g.n):
        path = [s]
        on = {s}

        def extend():
            u = path[-1]
            for w in g.adj[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    yield Cycle(tuple(path))
                elif w > s and w not in on:
                    path.append(w)
                    on.add(w)
                    yield from extend()
                    path.pop()
                    on.discard(w)

        yield from extend()


def find_tough_cut(g: Graph, max_size: int) -> ToughnessCut | None:
    """Smallest non-empty S (|S| <= max_size) with more than |S| components in g - S."""
    for size in range(1, min(max_size, g.n - 1) + 1):
        for cut in combinations(range(g.n), size):
            k = len(connected_components(g, cut))
            if k > size:
                return ToughnessCut(frozenset(cut), k)
    return None


def _orient(cycle: Sequence[int], x: int, y: int) -> list[int]:
    L = len(cycle)
    i = list(cycle).index(x)
    if cycle[(i + 1) % L] == y:
        return [cycle[(i + s) % L] for s in range(L)]
    if cycle[(i - 1) % L] == y:
        return [cycle[(i - s) % L] for s in range(L)]
    raise GraphError(f"xy = ({x}, {y}) is not an edge of the outer cycle")


def outerplanar_ham_path(g: Graph, x: int, y: int) -> HamPath:
    """Hamilton path starting x, y and ending at a degree-2 vertex.

    ``g`` must be 2-connected outerplanar with xy on its outer cycle.  Runs the
    inductive construction iteratively: while the vertex w before x on the
    current outer cycle has a chord vw, keep the outer path x..v and recurse
    into the piece spanned by v..w, entered through the chord.
    """
    if g.n < 3 or not is_block(g):
        raise GraphError("hypothesis failed: g is not 2-connected")
    try:
        cyc = outer_cycle(g)
    except GraphError:
        raise GraphError("hypothesis failed: g is not outerplanar") from None
    if not g.has_edge(x, y):
        raise GraphError("hypothesis failed: xy is not an edge")
    zone = _orient(cyc, x, y)
    prefix: list[int] = []
    while True:
        members = set(zone)
        w = zone[-1]
        chords = [v for v in g.adj[w] if v in members and v not in (zone[0], zone[-2])]
        if not chords:
            prefix.extend(zone)
            break
        pos = {v: i for i, v in enumerate(zone)}
        v = max(chords, key=pos.__getitem__)
        cut = pos[v]
        prefix.extend(zone[:cut])
        piece = zone[cut:]
        zone = [v, w] + piece[-2:0:-1]
    t = prefix[-1]
    return HamPath(tuple(prefix), g.degree(t))


def outerplanar_ham_path_minus(g: Graph, x: int, y: int) -> HamPath:
    """Hamilton path of g - y from x, ending at t = x (|V| = 2) or at a degree-2 vertex."""
    if xy_outerplanar_embedding(g, x, y) is None:
        raise GraphError("g is not xy-outerplanar")
    if g.n == 2:
        return HamPath((x,), g.degree(x))
    h = g if g.has_edge(x, y) else add_edge(g, (x, y))
    path = outerplanar_ham_path(h, y, x)
    verts = path.vertices[1:]
    return HamPath(verts, g.degree(verts[-1]))

