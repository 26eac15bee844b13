import json

import networkx as nx
import pytest

from minorham.canon import canonical_code
from minorham.enumerate import (
    GenerationCheckpoint,
    all_graphs,
    count_k25_free,
    filtered_3c_planar,
    generate_3c_planar,
    generate_triangulations,
    iter_3c_planar_levels,
)
from minorham.g6 import from_graph6, to_graph6
from minorham.minors import has_k2t_minor
from minorham.topology.connectivity import is_3_connected
from minorham.topology.planarity import is_planar

from conftest import to_nx

POLYHEDRA = {4: 1, 5: 2, 6: 7, 7: 34, 8: 257, 9: 2606}
TRIANGULATIONS = {4: 1, 5: 1, 6: 2, 7: 5, 8: 14, 9: 50, 10: 233}


@pytest.fixture(scope="module")
def atlas_polyhedra(atlas):
    """Canonical codes of the atlas graphs that are planar and 3-connected, by order."""
    out = {}
    for g in atlas:
        h = to_nx(g)
        if g.n >= 4 and nx.check_planarity(h)[0] and nx.node_connectivity(h) >= 3:
            out.setdefault(g.n, set()).add(canonical_code(g))
    return out


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_polyhedra_match_atlas(n, atlas_polyhedra):
    ours = [to_graph6(g) for g in generate_3c_planar(n)]
    assert len(ours) == len(set(ours)) == POLYHEDRA[n]
    assert set(ours) == atlas_polyhedra[n]


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_triangulations_match_atlas(n, atlas_polyhedra):
    tris = [to_graph6(g) for g in generate_triangulations(n)]
    expected = {c for c in atlas_polyhedra[n] if from_graph6(c).m == 3 * n - 6}
    assert set(tris) == expected


@pytest.mark.parametrize("n", [8, 9, 10])
def test_triangulation_counts(n):
    assert sum(1 for _ in generate_triangulations(n)) == TRIANGULATIONS[n]


def test_triangulation_order_too_small():
    with pytest.raises(ValueError):
        list(generate_triangulations(3))
    with pytest.raises(ValueError):
        list(generate_3c_planar(3))


@pytest.mark.parametrize("n", [8, 9])
def test_polyhedra_counts(n):
    gs = list(generate_3c_planar(n))
    assert len(gs) == POLYHEDRA[n]
    assert len({to_graph6(g) for g in gs}) == POLYHEDRA[n]


def test_generated_graphs_are_valid_and_canonical():
    for g in generate_3c_planar(8):
        assert is_planar(g) and is_3_connected(g)
        assert canonical_code(g) == to_graph6(g)


def test_levels_are_ordered():
    levels = list(iter_3c_planar_levels(8))
    edges = [m for m, _ in levels]
    assert edges == sorted(edges, reverse=True)
    assert edges[0] == 18 and edges[-1] == 12
    for _, codes in levels:
        assert codes == sorted(codes)


def test_workers_do_not_change_output():
    assert list(iter_3c_planar_levels(8, workers=2)) == list(iter_3c_planar_levels(8))


def test_checkpoint_resume(tmp_path):
    reference = list(iter_3c_planar_levels(8))
    it = iter_3c_planar_levels(8, checkpoint_dir=tmp_path)
    head = [next(it) for _ in range(3)]
    it.close()
    state = GenerationCheckpoint.load(tmp_path / "closure-n8.json")
    assert state.order == 8 and state.edges == head[-1][0]
    assert len(state.seen) == sum(len(c) for _, c in head)
    resumed = list(iter_3c_planar_levels(8, checkpoint_dir=tmp_path))
    assert resumed == reference


def test_checkpoint_wrong_order(tmp_path):
    list(iter_3c_planar_levels(6, checkpoint_dir=tmp_path))
    (tmp_path / "closure-n6.json").rename(tmp_path / "closure-n7.json")
    with pytest.raises(ValueError, match="n=6"):
        list(iter_3c_planar_levels(7, checkpoint_dir=tmp_path))


def test_checkpoint_schema(tmp_path):
    list(iter_3c_planar_levels(5, checkpoint_dir=tmp_path))
    path = tmp_path / "closure-n5.json"
    data = json.loads(path.read_text())
    assert data["schema"] == 1 and data["counters"]["levels"] == {"9": 1, "8": 1}
    data["schema"] = 99
    path.write_text(json.dumps(data))
    with pytest.raises(ValueError):
        GenerationCheckpoint.load(path)


@pytest.mark.parametrize("n,expected", [(7, 31), (8, 194), (9, 918)])
def test_g_table(n, expected):
    report = count_k25_free(n)
    assert report.k25_free == expected
    assert report.k25_free_hamiltonian == expected
    assert report.total_3c_planar == POLYHEDRA[n]


def test_k25_filter_matches_direct_search():
    codes = set(filtered_3c_planar(8, "k25-free"))
    direct = {to_graph6(g) for g in generate_3c_planar(8) if not has_k2t_minor(g, 5)}
    assert codes == direct and len(codes) == 194
    assert len(list(filtered_3c_planar(8, "k26-free"))) >= 194
    assert len(list(filtered_3c_planar(8, "none"))) == 257


def test_unknown_filter():
    with pytest.raises(ValueError):
        list(filtered_3c_planar(6, "k27-free"))


def test_report_json():
    report = count_k25_free(7, all_hamiltonian=True)
    data = report.to_json(timing=False)
    assert data == {
        "schema": 1, "kind": "CountReport", "n": 7, "total_3c_planar": 34, "k25_free": 31,
        "k25_free_hamiltonian": 31, "non_hamiltonian": [], "non_hamiltonian_k25_free": [],
    }
    assert "elapsed" in report.to_json()


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_all_graphs_counts(n, count, atlas):
    gs = all_graphs(n)
    assert len(gs) == count
    assert {to_graph6(g) for g in gs} == {canonical_code(g) for g in atlas if g.n == n}
