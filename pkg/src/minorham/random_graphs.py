"""Seeded random instances: outerplanar blocks, triangulations, 3-connected
planar graphs and reduction fixtures."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .enumerate import _k4_rotation, _split
from .graph import Graph, build_graph, connected_components, delete_edge, relabel
from .hamilton import Cycle
from .reductions import (
    ReductionStep,
    ReductionTrace,
    contract_outside_component,
    normalize_claim3,
    reduce_chord,
    reduce_deg3_vertex,
)
from .topology.connectivity import deletable_edges_3c, internally_disjoint_paths
from .topology.planarity import planar_embedding


def random_outerplanar_block(rng: random.Random, n: int, keep: float = 0.5) -> Graph:
    """Polygon on n >= 3 vertices plus a random subset of a random triangulation's diagonals."""
    if n < 3:
        raise ValueError("outerplanar blocks need n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    stack = [list(range(n))]
    while stack:
        poly = stack.pop()
        if len(poly) <= 3:
            continue
        i = rng.randrange(len(poly))
        j = (i + rng.randrange(2, len(poly) - 1)) % len(poly)
        a, b = sorted((i, j))
        if rng.random() < keep:
            edges.append((poly[a], poly[b]))
        stack.append(poly[a:b + 1])
        stack.append(poly[b:] + poly[:a + 1])
    perm = list(range(n))
    rng.shuffle(perm)
    return relabel(build_graph(n, edges), perm)


def random_triangulation_rotation(rng: random.Random, n: int) -> list[list[int]]:
    rot = _k4_rotation()
    while len(rot) < n:
        v = rng.randrange(len(rot))
        d = len(rot[v])
        i, j = sorted(rng.sample(range(d), 2))
        rot = _split(rot, v, i, j)
    return rot


def random_triangulation(rng: random.Random, n: int) -> Graph:
    rot = random_triangulation_rotation(rng, n)
    return Graph(n, [sorted(r) for r in rot])


def random_3c_planar(rng: random.Random, n: int, deletions: int | None = None) -> Graph:
    """Random triangulation thinned by deletions that keep 3-connectivity."""
    g = random_triangulation(rng, n)
    budget = rng.randrange(0, n) if deletions is None else deletions
    for _ in range(budget):
        cand = deletable_edges_3c(g.masks)
        if len(cand) == 0:
            break
        u, v = cand[rng.randrange(len(cand))]
        g = delete_edge(g, (int(u), int(v)))
    return g


def truncate_vertex(g: Graph, v: int) -> Graph:
    """Replace a vertex by a cycle through new vertices, one per incident edge.

    The new cycle follows the rotation at ``v`` in a planar embedding, so
    planarity and 3-connectivity survive; ``v`` is reused for the first new vertex.
    """
    nbrs = list(planar_embedding(g).rotation[v])
    ids = [v] + [g.n + k for k in range(len(nbrs) - 1)]
    edges = [e for e in g.edges() if v not in e]
    edges += [(ids[k], w) for k, w in enumerate(nbrs)]
    edges += [(ids[k], ids[(k + 1) % len(ids)]) for k in range(len(ids))]
    return build_graph(g.n + len(ids) - 1, edges)


def random_cycle(rng: random.Random, g: Graph, target: int | None = None, attempts: int = 50) -> Cycle:
    """A random cycle from randomised depth-first walks.

    Returns the first cycle with at least ``target`` vertices, or the longest
    one seen; without a target the longest found is returned.
    """
    goal = g.n if target is None else target
    best: tuple[int, ...] = ()
    for _ in range(attempts):
        start = rng.randrange(g.n)
        path = [start]
        on = {start}
        while True:
            u = path[-1]
            closing = len(path) >= 3 and g.has_edge(u, start)
            if closing and len(path) > len(best):
                best = tuple(path)
                if len(best) >= goal:
                    return Cycle(best)
            nxt = [w for w in g.adj[u] if w not in on]
            if not nxt:
                break
            w = rng.choice(nxt)
            path.append(w)
            on.add(w)
    if not best:
        raise ValueError("graph has no cycle")
    return Cycle(best)


@dataclass(frozen=True)
class ReductionFixture:
    graph: Graph
    cycle: Cycle
    trace: ReductionTrace


def _applicable(rng: random.Random, g: Graph, c: Cycle) -> list[tuple[str, object]]:
    on_c = set(c.vertices)
    out: list[tuple[str, object]] = []
    for comp in connected_components(g, c.vertices):
        attach = {w for v in comp for w in g.adj[v] if w in on_c}
        if len(comp) > 1 and len(attach) == 3:
            out.append(("component", comp))
    if g.n >= 5:
        out += [("deg3", v) for v in range(g.n) if v not in on_c and g.degree(v) == 3]
    cyc_edges = set(c.edges())
    min_len = rng.choice((1, 2))
    for a, b in g.edges():
        if (a, b) not in cyc_edges and internally_disjoint_paths(delete_edge(g, (a, b)), a, b, 3, min_len):
            out.append(("chord", (a, b, min_len)))
    return out


def random_reduction_fixture(rng: random.Random, n: int, max_steps: int = 6) -> ReductionFixture:
    """A 3-connected planar graph, a cycle C, and a random C-reduction trace.

    Some degree-3 vertices off C are truncated first so that g - V(C) has
    components with several vertices.  When every component of g - V(C) has
    exactly three neighbours on C, the trace may instead be the full
    normalisation of :func:`normalize_claim3`.
    """
    g = random_3c_planar(rng, n)
    c = random_cycle(rng, g, rng.randint(3, g.n))
    for v in [v for v in range(g.n) if v not in c.vertices and g.degree(v) == 3]:
        if rng.random() < 0.4:
            g = truncate_vertex(g, v)
    on_c = set(c.vertices)
    comps = connected_components(g, c.vertices)
    if comps and all(len({w for v in k for w in g.adj[v] if w in on_c}) == 3 for k in comps) and rng.random() < 0.5:
        return ReductionFixture(g, c, normalize_claim3(g, c, rng.choice(comps)))
    steps: list[ReductionStep] = []
    cur, cyc = g, c
    for _ in range(max_steps):
        options = _applicable(rng, cur, cyc)
        if not options:
            break
        kind = rng.choice(sorted({k for k, _ in options}))
        arg = rng.choice([a for k, a in options if k == kind])
        if kind == "component":
            cur2, step = contract_outside_component(cur, cyc, arg)
        elif kind == "deg3":
            cur2, step = reduce_deg3_vertex(cur, cyc, arg)
        else:
            a, b, min_len = arg
            cur2, step = reduce_chord(cur, cyc, (a, b), min_len)
        steps.append(step)
        cur = cur2
        cyc = Cycle(tuple(step.id_map[v] for v in cyc.vertices))
    return ReductionFixture(g, c, ReductionTrace(g, c, tuple(steps), cur))
