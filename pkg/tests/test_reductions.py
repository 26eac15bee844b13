import json
import random

import pytest

from minorham.families import herschel, prism_with_chords, wheel
from minorham.graph import build_graph, complete_graph, contract_edge
from minorham.hamilton import Cycle, hamilton_cycle, iter_cycles, longest_cycle
from minorham.random_graphs import random_reduction_fixture
from minorham.reductions import (
    CONTRACT_COMPONENT,
    CONTRACT_DEG3,
    DELETE_EDGE,
    ReductionError,
    ReductionTrace,
    compose_traces,
    contract_outside_component,
    halin_edge,
    lift_cycle,
    normalize_claim3,
    reduce_chord,
    reduce_deg3_vertex,
    single_step_trace,
    verify_trace,
)
from minorham.topology.connectivity import internally_disjoint_paths, is_3_connected


def cube():
    return build_graph(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


CUBE_C = Cycle((1, 3, 2, 6, 4, 5))


def octahedron():
    return build_graph(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3 or u >= 3])


# Halin edges


def test_halin_edge_on_wheel_rim():
    w = wheel(5)
    e = halin_edge(w, 1)
    assert 1 in e and is_3_connected(contract_edge(w, e))


@pytest.mark.parametrize("v", range(6))
def test_halin_edge_on_prism(v):
    p = prism_with_chords(3)
    e = halin_edge(p, v)
    assert v in e and is_3_connected(contract_edge(p, e))


def test_halin_edge_rejects_degree_four():
    g = octahedron()
    assert g.degrees() == [4] * 6
    with pytest.raises(ReductionError, match="degree"):
        halin_edge(g, 0)


def test_halin_edge_rejects_k4():
    with pytest.raises(ReductionError):
        halin_edge(complete_graph(4), 0)


# component contraction


def test_hub_is_not_three_attached():
    w = wheel(6)
    rim = Cycle(tuple(range(1, 7)))
    with pytest.raises(ReductionError, match="not 3"):
        contract_outside_component(w, rim, {0})


def test_herschel_single_vertex_component():
    h = herschel()
    c = longest_cycle(h)
    (w,) = set(range(h.n)) - set(c.vertices)
    out, step = contract_outside_component(h, c, {w})
    assert step.kind == CONTRACT_COMPONENT
    assert out.n == h.n and is_3_connected(out)


def test_two_vertex_component_collapses():
    edges = [(i, (i + 1) % 6) for i in range(6)]
    edges += [(6, 7), (6, 0), (6, 2), (7, 2), (7, 4), (1, 3), (3, 5), (5, 1)]
    g = build_graph(8, edges)
    assert is_3_connected(g)
    c = Cycle(tuple(range(6)))
    out, step = contract_outside_component(g, c, {6, 7})
    assert out.n == 7 and is_3_connected(out)
    d = step.id_map[6]
    assert step.id_map[7] == d and out.degree(d) == 3
    trace = single_step_trace(g, c, out, step)
    for z in iter_cycles(out):
        assert len(lift_cycle(trace, z)) >= len(z)


def test_component_must_be_a_component():
    with pytest.raises(ReductionError):
        contract_outside_component(cube(), CUBE_C, {0, 7})


# degree-3 contraction


def test_cube_deg3():
    out, step = reduce_deg3_vertex(cube(), CUBE_C, 0)
    assert step.kind == CONTRACT_DEG3 and step.data[0] == 0
    assert out.n == 7 and is_3_connected(out)
    assert Cycle(tuple(step.id_map[v] for v in CUBE_C.vertices)).is_valid(out)


def test_herschel_deg3():
    h = herschel()
    c = longest_cycle(h)
    (b,) = set(range(h.n)) - set(c.vertices)
    out, _ = reduce_deg3_vertex(h, c, b)
    assert out.n == 10 and is_3_connected(out)


def test_deg3_rejects_small_and_on_cycle():
    with pytest.raises(ReductionError):
        reduce_deg3_vertex(complete_graph(4), Cycle((0, 1, 2)), 3)
    with pytest.raises(ReductionError, match="lies on C"):
        reduce_deg3_vertex(cube(), CUBE_C, 1)


# chord deletion


def test_k5_chord():
    out, step = reduce_chord(complete_graph(5), Cycle((0, 1, 2, 3, 4)), (0, 2))
    assert step.kind == DELETE_EDGE and out.m == 9 and is_3_connected(out)


def test_prism_diagonal():
    g = prism_with_chords(3, 1)
    c = Cycle((0, 1, 2, 5, 4, 3))
    assert c.is_valid(g)
    out, _ = reduce_chord(g, c, (1, 3), min_len=1)
    assert out == prism_with_chords(3)


def test_c6_chord_rejected():
    g = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    with pytest.raises(ReductionError):
        reduce_chord(g, Cycle(tuple(range(6))), (0, 3))


def test_cycle_edge_rejected():
    with pytest.raises(ReductionError, match="edge of C"):
        reduce_chord(complete_graph(5), Cycle((0, 1, 2, 3, 4)), (0, 1))


def test_min_len_matters():
    # K5 - 02 has three disjoint 0-2 paths of length 2; length 3 would need six inner vertices
    g = complete_graph(5)
    c = Cycle((0, 1, 2, 3, 4))
    assert reduce_chord(g, c, (0, 2), min_len=2)[0].m == 9
    assert internally_disjoint_paths(build_graph(5, [e for e in g.edges() if e != (0, 2)]), 0, 2, 3, 3) is None


# normalisation


def test_normalize_fixpoint_is_empty():
    trace = normalize_claim3(complete_graph(4), Cycle((0, 1, 2)), {3})
    assert trace.steps == () and trace.marked == 3


def test_normalize_cube():
    trace = normalize_claim3(cube(), CUBE_C, {0})
    assert trace.steps[0].kind == CONTRACT_DEG3 and trace.steps[0].data[0] == 7
    assert trace.result.n == 7
    d = trace.marked
    assert trace.result.degree(d) == 3
    c = trace.result_cycle()
    assert set(range(7)) - set(c.vertices) == {d}
    for a, b in trace.result.edges():
        if (a, b) in set(c.edges()):
            continue
        h = build_graph(7, [e for e in trace.result.edges() if e != (a, b)])
        assert internally_disjoint_paths(h, a, b, 3, 2) is None
    verify_trace(trace)


def test_normalize_rejects_four_attachments():
    w = wheel(6)
    with pytest.raises(ReductionError, match="neighbours on C"):
        normalize_claim3(w, Cycle(tuple(range(1, 7))), {0})


# lifting and traces


def test_empty_trace_lifts_identically():
    g = cube()
    trace = ReductionTrace(g, CUBE_C, (), g)
    z = hamilton_cycle(g)
    assert lift_cycle(trace, z) == z


def test_delete_step_lifts_identically():
    g = complete_graph(5)
    c = Cycle((0, 1, 2, 3, 4))
    out, step = reduce_chord(g, c, (0, 2))
    trace = single_step_trace(g, c, out, step)
    for z in iter_cycles(out):
        assert lift_cycle(trace, z) == z


def test_cube_lift():
    trace = normalize_claim3(cube(), CUBE_C, {0})
    z = hamilton_cycle(trace.result)
    lifted = lift_cycle(trace, z)
    assert len(lifted) >= 7 and lifted.is_valid(cube())


def test_lift_rejects_foreign_cycle():
    trace = normalize_claim3(cube(), CUBE_C, {0})
    with pytest.raises(ReductionError):
        lift_cycle(trace, Cycle((0, 1, 5)))


def test_json_roundtrip():
    trace = normalize_claim3(cube(), CUBE_C, {0})
    back = ReductionTrace.from_json(json.dumps(trace.to_json()))
    assert back == trace


def test_json_rejects_tampered_result():
    data = normalize_claim3(cube(), CUBE_C, {0}).to_json()
    data["result"] = "F~~~~"
    with pytest.raises(ReductionError):
        ReductionTrace.from_json(data)


def test_verify_rejects_broken_cycle():
    g = complete_graph(5)
    c = Cycle((0, 1, 2, 3, 4))
    out, step = reduce_chord(g, c, (0, 2))
    bad = ReductionTrace(g, Cycle((0, 2, 1, 3, 4)), (step,), out)
    with pytest.raises(ReductionError):
        verify_trace(bad)


def test_composition_is_transitive():
    rng = random.Random(9)
    done = 0
    while done < 20:
        f = random_reduction_fixture(rng, rng.randint(6, 10))
        if len(f.trace.steps) < 2:
            continue
        k = len(f.trace.steps) // 2
        mid = f.trace.graphs()[k]
        first = ReductionTrace(f.graph, f.cycle, f.trace.steps[:k], mid)
        second = ReductionTrace(mid, first.result_cycle(), f.trace.steps[k:], f.trace.result)
        verify_trace(first)
        verify_trace(second)
        whole = compose_traces(first, second)
        assert whole.result == f.trace.result and whole.steps == f.trace.steps
        for z in list(iter_cycles(whole.result))[:50]:
            assert len(lift_cycle(whole, z)) == len(lift_cycle(first, lift_cycle(second, z)))
        done += 1


def test_compose_rejects_mismatch():
    trace = normalize_claim3(cube(), CUBE_C, {0})
    with pytest.raises(ReductionError):
        compose_traces(trace, trace)


def test_random_fixtures():
    rng = random.Random(5)
    kinds = set()
    for _ in range(60):
        f = random_reduction_fixture(rng, rng.randint(5, 10))
        verify_trace(f.trace)
        kinds.update(s.kind for s in f.trace.steps)
        res = f.trace.result
        assert is_3_connected(res)
        if res.n <= 9:
            for z in iter_cycles(res):
                assert len(lift_cycle(f.trace, z)) >= len(z)
    assert kinds == {CONTRACT_COMPONENT, CONTRACT_DEG3, DELETE_EDGE}


def test_chord_needs_three_connected_input():
    g = build_graph(5, [(i, (i + 1) % 5) for i in range(5)] + [(0, 2)])
    with pytest.raises(ReductionError, match="3-connected"):
        reduce_chord(g, Cycle((0, 1, 2, 3, 4)), (0, 2))
