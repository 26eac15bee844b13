"""C-reductions: contractions and deletions that keep a cycle C, 3-connectivity,
and the ability to lift any cycle back to one at least as long."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .g6 import from_graph6, to_graph6
from .graph import Graph, GraphError, connected_components, contract_edge, contract_set, delete_edge, shortest_path
from .hamilton import Cycle
from .topology.connectivity import internally_disjoint_paths, is_3_connected
from .topology.planarity import is_planar

CONTRACT_COMPONENT = "contract-component"
CONTRACT_DEG3 = "contract-deg3-edge"
DELETE_EDGE = "delete-edge"


class ReductionError(GraphError):
    """A reduction whose hypotheses do not hold."""


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    data: tuple[int, ...]
    id_map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "data": list(self.data), "id_map": list(self.id_map)}


@dataclass(frozen=True)
class ReductionTrace:
    original: Graph
    cycle: Cycle
    steps: tuple[ReductionStep, ...]
    result: Graph
    marked: int | None = field(default=None)

    def result_cycle(self) -> Cycle:
        vs = self.cycle.vertices
        for step in self.steps:
            vs = tuple(step.id_map[v] for v in vs)
        return Cycle(vs)

    def graphs(self) -> list[Graph]:
        out = [self.original]
        for step in self.steps:
            out.append(apply_step(out[-1], step))
        return out

    def to_json(self) -> dict:
        return {
            "schema": 1,
            "original": to_graph6(self.original).decode(),
            "cycle": list(self.cycle.vertices),
            "steps": [s.to_json() for s in self.steps],
            "result": to_graph6(self.result).decode(),
            "marked": self.marked,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> "ReductionTrace":
        if isinstance(data, str):
            data = json.loads(data)
        steps = tuple(ReductionStep(s["kind"], tuple(s["data"]), tuple(s["id_map"])) for s in data["steps"])
        trace = cls(from_graph6(data["original"]), Cycle(tuple(data["cycle"])), steps, from_graph6(data["result"]), data.get("marked"))
        verify_trace(trace)
        return trace


def apply_step(g: Graph, step: ReductionStep) -> Graph:
    if step.kind == DELETE_EDGE:
        out = delete_edge(g, step.data)
        id_map = list(range(g.n))
    elif step.kind in (CONTRACT_COMPONENT, CONTRACT_DEG3):
        out, id_map = contract_set(g, step.data)
    else:
        raise ReductionError(f"unknown step kind {step.kind!r}")
    if tuple(id_map) != step.id_map:
        raise ReductionError("step id_map does not match its replay")
    return out


def _cycle_intact(g: Graph, cycle: Sequence[int]) -> bool:
    return Cycle(tuple(cycle)).is_valid(g)


def verify_trace(trace: ReductionTrace) -> None:
    """Replay every step, asserting C survives and each graph is 3-connected."""
    g = trace.original
    cyc = trace.cycle.vertices
    if not _cycle_intact(g, cyc):
        raise ReductionError("trace cycle is not a cycle of the original graph")
    on_c = set(cyc)
    for i, step in enumerate(trace.steps):
        if step.kind == DELETE_EDGE:
            a, b = step.data
            if a in on_c and b in on_c and (a, b) in {tuple(sorted(e)) for e in Cycle(cyc).edges()}:
                raise ReductionError(f"step {i} deletes an edge of C")
        else:
            if sum(1 for v in step.data if v in on_c) > 1:
                raise ReductionError(f"step {i} contracts two vertices of C together")
        g = apply_step(g, step)
        cyc = tuple(step.id_map[v] for v in cyc)
        on_c = set(cyc)
        if not _cycle_intact(g, cyc):
            raise ReductionError(f"step {i} breaks C")
        if not is_3_connected(g):
            raise ReductionError(f"step {i} loses 3-connectivity")
    if g != trace.result:
        raise ReductionError("replayed result differs from the stored result")


def halin_edge(g: Graph, v: int) -> tuple[int, int]:
    """An edge at the degree-3 vertex v whose contraction keeps g 3-connected."""
    if g.n < 5:
        raise ReductionError("needs at least 5 vertices")
    if g.degree(v) != 3:
        raise ReductionError(f"vertex {v} has degree {g.degree(v)}, not 3")
    if not is_3_connected(g):
        raise ReductionError("graph is not 3-connected")
    for w in g.adj[v]:
        if is_3_connected(contract_edge(g, (v, w))):
            return (v, w)
    raise RuntimeError(f"no contractible edge at degree-3 vertex {v}; input violates Halin's theorem")


def _outside_components(g: Graph, cycle: Cycle) -> list[frozenset[int]]:
    return connected_components(g, cycle.vertices)


def _check_cycle(g: Graph, c: Cycle) -> None:
    if not c.is_valid(g):
        raise ReductionError("C is not a cycle of g")


def contract_outside_component(g: Graph, c: Cycle, b: Iterable[int]) -> tuple[Graph, ReductionStep]:
    """Contract a component of g - V(C) with exactly three neighbours on C."""
    _check_cycle(g, c)
    comp = frozenset(b)
    if comp not in _outside_components(g, c):
        raise ReductionError("b is not a component of g - V(C)")
    on_c = set(c.vertices)
    attach = {w for v in comp for w in g.adj[v] if w in on_c}
    if len(attach) != 3:
        raise ReductionError(f"component has {len(attach)} neighbours on C, not 3")
    if not is_3_connected(g):
        raise ReductionError("graph is not 3-connected")
    out, id_map = contract_set(g, comp)
    if not is_3_connected(out):
        raise AssertionError("contracting a 3-attached component lost 3-connectivity")
    return out, ReductionStep(CONTRACT_COMPONENT, tuple(sorted(comp)), tuple(id_map))


def reduce_deg3_vertex(g: Graph, c: Cycle, b: int) -> tuple[Graph, ReductionStep]:
    """Contract a Halin edge at the degree-3 vertex b off C."""
    _check_cycle(g, c)
    if b in c.vertices:
        raise ReductionError(f"vertex {b} lies on C")
    _, w = halin_edge(g, b)
    out, id_map = contract_set(g, (b, w))
    return out, ReductionStep(CONTRACT_DEG3, (b, w), tuple(id_map))


def reduce_chord(g: Graph, c: Cycle, e: Sequence[int], min_len: int = 2) -> tuple[Graph, ReductionStep]:
    """Delete an edge off C whose ends are joined by three internally disjoint paths in g - e."""
    _check_cycle(g, c)
    a, b = sorted((int(e[0]), int(e[1])))
    if not g.has_edge(a, b):
        raise ReductionError(f"({a}, {b}) is not an edge")
    if (a, b) in set(c.edges()):
        raise ReductionError(f"({a}, {b}) is an edge of C")
    if not is_3_connected(g):
        raise ReductionError("graph is not 3-connected")
    rest = delete_edge(g, (a, b))
    if internally_disjoint_paths(rest, a, b, 3, min_len) is None:
        raise ReductionError(f"no three internally disjoint paths between {a} and {b}")
    if not is_3_connected(rest):
        raise AssertionError("chord deletion lost 3-connectivity")
    return rest, ReductionStep(DELETE_EDGE, (a, b), tuple(range(g.n)))


def _qualifying_chord(g: Graph, c: Cycle, min_len: int) -> tuple[int, int] | None:
    cyc_edges = set(c.edges())
    for a, b in g.edges():
        if (a, b) in cyc_edges:
            continue
        if internally_disjoint_paths(delete_edge(g, (a, b)), a, b, 3, min_len) is not None:
            return a, b
    return None


def normalize_claim3(g: Graph, c: Cycle, d_component: Iterable[int]) -> ReductionTrace:
    """Reduce to C plus one degree-3 vertex d with no deletable chord.

    Pipeline: contract every outside component to a vertex, contract a Halin
    edge at every outside vertex other than d, then delete chords with three
    internally disjoint paths of length >= 2 until none is left.
    """
    _check_cycle(g, c)
    D = frozenset(d_component)
    comps = _outside_components(g, c)
    if D not in comps:
        raise ReductionError("d_component is not a component of g - V(C)")
    on_c = set(c.vertices)
    for comp in comps:
        k = len({w for v in comp for w in g.adj[v] if w in on_c})
        if k != 3:
            raise ReductionError(f"component {sorted(comp)} has {k} neighbours on C, not 3")
    if not is_3_connected(g):
        raise ReductionError("graph is not 3-connected")
    if not is_planar(g):
        raise ReductionError("graph is not planar")

    steps: list[ReductionStep] = []
    cur, cyc = g, c
    # track each component by its smallest vertex, renamed step by step
    reps = {min(comp): comp == D for comp in comps}
    pending = [(min(comp), comp) for comp in comps]

    def advance(step: ReductionStep, out: Graph):
        nonlocal cur, cyc, pending, reps
        steps.append(step)
        cur = out
        cyc = Cycle(tuple(step.id_map[v] for v in cyc.vertices))
        pending = [(step.id_map[r], frozenset(step.id_map[v] for v in comp)) for r, comp in pending]
        reps = {step.id_map[r]: is_d for r, is_d in reps.items()}

    for idx in range(len(pending)):
        comp = pending[idx][1]
        if len(comp) > 1:
            out, step = contract_outside_component(cur, cyc, comp)
            advance(step, out)
    d = next(r for r, is_d in reps.items() if is_d)
    others = [r for r, is_d in reps.items() if not is_d]
    while others:
        b = others.pop(0)
        out, step = reduce_deg3_vertex(cur, cyc, b)
        advance(step, out)
        d = step.id_map[d]
        others = [step.id_map[o] for o in others]
    while True:
        chord = _qualifying_chord(cur, cyc, 2)
        if chord is None:
            break
        out, step = reduce_chord(cur, cyc, chord, 2)
        advance(step, out)
    outside = [v for v in range(cur.n) if v not in set(cyc.vertices)]
    if outside != [d] or cur.degree(d) != 3:
        raise AssertionError("normalisation did not leave a single degree-3 outside vertex")
    return ReductionTrace(g, c, tuple(steps), cur, d)


def compose_traces(first: ReductionTrace, second: ReductionTrace) -> ReductionTrace:
    if second.original != first.result or second.cycle != first.result_cycle():
        raise ReductionError("second trace does not start where the first ends")
    return ReductionTrace(first.original, first.cycle, first.steps + second.steps, second.result, second.marked)


def _inverse(id_map: Sequence[int], merged: set[int]) -> dict[int, int]:
    inv: dict[int, int] = {}
    for old, new in enumerate(id_map):
        if old not in merged:
            inv[new] = old
    return inv


def _lift_step(pre: Graph, step: ReductionStep, z: list[int]) -> list[int]:
    if step.kind == DELETE_EDGE:
        return list(z)
    merged = set(step.data)
    inv = _inverse(step.id_map, merged)
    m = step.id_map[min(merged)]
    if m not in z:
        return [inv[v] for v in z]
    i = z.index(m)
    z = z[i:] + z[:i]
    p, q = inv[z[-1]], inv[z[1]]
    rest = [inv[v] for v in z[1:]]  # q ... p
    if step.kind == CONTRACT_COMPONENT:
        inner = shortest_path(pre, [v for v in pre.adj[p] if v in merged],
                              [v for v in merged if pre.has_edge(v, q)], within=merged)
        if inner is None:
            raise AssertionError("no path through the contracted component")
        # inner runs from p's side to q's side
        return inner + rest
    b, c = step.data
    options = ([b, c], [c, b], [c], [b])
    for opt in options:
        if pre.has_edge(p, opt[0]) and pre.has_edge(opt[-1], q):
            return opt + rest
    raise AssertionError("contracted edge cannot be re-expanded")


def lift_cycle(trace: ReductionTrace, z: Cycle) -> Cycle:
    """A cycle of trace.original at least as long as the cycle z of trace.result."""
    if not z.is_valid(trace.result):
        raise ReductionError("z is not a cycle of the reduced graph")
    graphs = trace.graphs()
    verts = list(z.vertices)
    for step, pre in zip(reversed(trace.steps), reversed(graphs[:-1])):
        verts = _lift_step(pre, step, verts)
    out = Cycle(tuple(verts))
    if not out.is_valid(trace.original) or len(out) < len(z):
        raise AssertionError("lifted cycle is invalid or shorter")
    return out


def single_step_trace(g: Graph, c: Cycle, out: Graph, step: ReductionStep) -> ReductionTrace:
    return ReductionTrace(g, c, (step,), out)
