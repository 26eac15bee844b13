import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from minorham.families import g_k, herschel, wheel
from minorham.graph import (
    GraphError,
    build_graph,
    complete_graph,
    connected_components,
    contract_edge,
    contract_set,
    delete_edge,
    delete_vertices,
    graph_from_masks,
    induced_subgraph,
    relabel,
    shortest_path,
)
from minorham.families import complete_bipartite

from conftest import to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, edges)


def test_build_k4_degrees():
    g = build_graph(4, itertools.combinations(range(4), 2))
    assert g.degrees() == [3, 3, 3, 3]
    assert g.m == 6


def test_build_dedups_reversed_pairs():
    g = build_graph(2, [(0, 1), (1, 0)])
    assert g.m == 1 and g.edges() == [(0, 1)]


def test_herschel_has_18_edges():
    assert herschel().m == 18


@pytest.mark.parametrize("pair", [(1, 1), (0, 4), (-1, 2)])
def test_build_rejects_bad_pairs(pair):
    with pytest.raises(GraphError) as info:
        build_graph(4, [(0, 1), pair])
    assert info.value.pair == pair


def test_symmetric_sorted_adjacency():
    g = build_graph(5, [(4, 0), (2, 0), (3, 1)])
    assert g.adj[0] == (2, 4)
    for u in range(g.n):
        for v in g.adj[u]:
            assert u in g.adj[v]


def test_contract_edge_of_k4_is_triangle():
    h = contract_edge(complete_graph(4), (1, 3))
    assert h == complete_graph(3)


def test_contract_spoke_of_five_vertex_wheel():
    # hub and one rim vertex merge: 4 vertices, 5 edges (a triangle fan, not K4)
    h = contract_edge(wheel(4), (0, 1))
    assert (h.n, h.m) == (4, 5)
    assert not nx.is_isomorphic(to_nx(h), nx.complete_graph(4))
    assert sorted(h.degrees()) == [2, 2, 3, 3]


def test_contract_path_edge_of_g2_gives_herschel():
    g = g_k(2)
    h = contract_edge(g, (g.index("v1"), g.index("v2")))
    assert nx.is_isomorphic(to_nx(h), to_nx(herschel()))


def test_contract_rejects_non_edge():
    with pytest.raises(GraphError):
        contract_edge(build_graph(3, [(0, 1)]), (0, 2))


def test_contract_set_id_map():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h, id_map = contract_set(g, [1, 2])
    assert id_map == [0, 1, 1, 2, 3]
    assert h.edges() == [(0, 1), (1, 2), (2, 3)]


@given(graphs())
def test_contract_keeps_graph_simple(g):
    for e in g.edges():
        h = contract_edge(g, e)
        assert h.n == g.n - 1
        assert all(v not in h.adj[v] for v in range(h.n))
        assert h.m <= g.m - 1


def test_components_examples():
    assert len(connected_components(complete_graph(4))) == 1
    k23 = complete_bipartite(2, 3)
    assert connected_components(k23, [0, 1]) == [frozenset({2}), frozenset({3}), frozenset({4})]
    g = g_k(1)
    cut = [g.index(s) for s in ("x", "y", "z", "u4", "u5")]
    assert len(connected_components(g, cut)) == 6


@given(graphs(), st.data())
def test_components_partition(g, data):
    removed = data.draw(st.sets(st.integers(0, g.n - 1)))
    comps = connected_components(g, removed)
    union = set().union(*comps) if comps else set()
    assert union == set(range(g.n)) - removed
    assert sum(len(c) for c in comps) == len(union)
    owner = {v: i for i, c in enumerate(comps) for v in c}
    for u, v in g.edges():
        if u in owner and v in owner:
            assert owner[u] == owner[v]
    expect = nx.number_connected_components(to_nx(g).subgraph(set(range(g.n)) - removed)) if union else 0
    assert len(comps) == expect


@given(graphs(), st.randoms())
def test_relabel_roundtrip(g, r):
    perm = list(range(g.n))
    r.shuffle(perm)
    inv = [0] * g.n
    for old, new in enumerate(perm):
        inv[new] = old
    assert relabel(relabel(g, perm), inv) == g


def test_subgraph_helpers():
    g = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    sub, kept = induced_subgraph(g, [0, 1, 2])
    assert kept == [0, 1, 2] and sub.edges() == [(0, 1), (1, 2)]
    rest, kept = delete_vertices(g, [0])
    assert kept == [1, 2, 3, 4] and rest.m == 3
    assert delete_edge(g, (0, 4)).m == 4


def test_shortest_path_within():
    g = build_graph(6, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (5, 2)])
    assert shortest_path(g, [0], [2]) == [0, 1, 2]
    assert shortest_path(g, [0], [2], within={0, 3, 4, 5, 2}) == [0, 3, 4, 5, 2]
    assert shortest_path(g, [0], [2], within={0, 3}) is None


@given(graphs(max_n=12))
def test_masks_roundtrip(g):
    assert graph_from_masks(g.masks) == g
