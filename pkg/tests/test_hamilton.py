import itertools
import random

import networkx as nx
import pytest

from minorham.families import g_k, goldner_harary, herschel, petersen, wheel
from minorham.graph import GraphError, build_graph, complete_graph, cycle_graph, path_graph
from minorham.hamilton import (
    Cycle,
    find_tough_cut,
    hamilton_cycle,
    hamilton_search,
    is_hamiltonian,
    iter_cycles,
    longest_cycle,
    outerplanar_ham_path,
    outerplanar_ham_path_minus,
)
from minorham.random_graphs import random_outerplanar_block
from minorham.topology.outerplanar import outer_cycle

from conftest import random_graph, to_nx


def brute_hamiltonian(g):
    if g.n < 3:
        return False
    for perm in itertools.permutations(range(1, g.n)):
        order = (0,) + perm
        if perm[0] < perm[-1] and all(g.has_edge(order[i - 1], order[i]) for i in range(g.n)):
            return True
    return False


def test_hamiltonicity_matches_brute_force_on_atlas(atlas):
    for g in atlas:
        if g.n < 3:
            continue
        cyc = hamilton_cycle(g)
        assert (cyc is not None) == brute_hamiltonian(g), g.edges()
        if cyc is not None:
            assert len(cyc) == g.n and cyc.is_valid(g)


@pytest.mark.parametrize("seed", range(15))
def test_cycle_enumeration_matches_networkx(seed):
    rng = random.Random(seed)
    g = random_graph(rng, rng.randint(4, 8), 0.5)
    ours = {frozenset(c.edges()) for c in iter_cycles(g)}
    theirs = set()
    for c in nx.simple_cycles(to_nx(g)):
        if len(c) >= 3:
            theirs.add(frozenset((min(c[i - 1], c[i]), max(c[i - 1], c[i])) for i in range(len(c))))
    assert ours == theirs
    assert len(ours) == sum(1 for _ in iter_cycles(g))


@pytest.mark.parametrize("seed", range(20))
def test_longest_cycle_matches_enumeration(seed):
    rng = random.Random(100 + seed)
    g = random_graph(rng, rng.randint(4, 9), rng.uniform(0.25, 0.6))
    best = max((len(c) for c in iter_cycles(g)), default=0)
    cyc = longest_cycle(g)
    if best == 0:
        assert cyc is None
    else:
        assert len(cyc) == best and cyc.is_valid(g)


def test_named_circumferences():
    assert len(longest_cycle(herschel())) == 10
    assert len(longest_cycle(petersen())) == 9
    assert longest_cycle(path_graph(6)) is None


@pytest.mark.parametrize("g", [herschel(), petersen(), goldner_harary(), g_k(1), g_k(3)])
def test_non_hamiltonian(g):
    assert not is_hamiltonian(g)


@pytest.mark.parametrize("g", [complete_graph(5), wheel(7), cycle_graph(9)])
def test_hamiltonian(g):
    assert hamilton_cycle(g).is_valid(g)


def test_exhaustion_is_reproducible():
    a = hamilton_search(herschel())[1]
    b = hamilton_search(herschel())[1]
    assert a == b and a.nodes > 0


def test_degree_one_short_circuits():
    cyc, ex = hamilton_search(build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]))
    assert cyc is None and ex.nodes == 0


def test_too_small_for_cycles():
    with pytest.raises(GraphError):
        hamilton_cycle(build_graph(2, [(0, 1)]))


def test_cycle_validity():
    g = cycle_graph(5)
    assert Cycle((0, 1, 2, 3, 4)).is_valid(g)
    assert not Cycle((0, 1, 3, 2, 4)).is_valid(g)
    assert not Cycle((0, 1)).is_valid(g)
    assert not Cycle((0, 1, 2, 1)).is_valid(g)


def test_herschel_tough_cut():
    cut = find_tough_cut(herschel(), 5)
    assert cut is not None and len(cut.cut) == 5 and cut.component_count == 6
    assert find_tough_cut(herschel(), 4) is None


def test_petersen_is_tough_enough():
    assert find_tough_cut(petersen(), 4) is None


def test_star_tough_cut_is_the_centre():
    star = build_graph(5, [(0, v) for v in range(1, 5)])
    cut = find_tough_cut(star, 3)
    assert cut.cut == frozenset({0}) and cut.component_count == 4


# outerplanar Hamilton paths


def check_path(g, x, y, path):
    assert path.vertices[:2] == (x, y)
    assert sorted(path.vertices) == list(range(g.n))
    assert path.is_path_of(g)
    assert g.degree(path.terminal) == 2 == path.terminal_degree


def test_outerplanar_paths_random():
    rng = random.Random(21)
    for _ in range(300):
        g = random_outerplanar_block(rng, rng.randint(3, 12), rng.random())
        cyc = outer_cycle(g)
        i = rng.randrange(g.n)
        x, y = cyc[i], cyc[(i + rng.choice((1, -1))) % g.n]
        check_path(g, x, y, outerplanar_ham_path(g, x, y))


def test_fan_path():
    # apex 0 over the path 1-2-3-4-5
    fan = build_graph(6, [(0, v) for v in range(1, 6)] + [(v, v + 1) for v in range(1, 5)])
    path = outerplanar_ham_path(fan, 0, 1)
    check_path(fan, 0, 1, path)
    assert path.vertices == (0, 1, 2, 3, 4, 5)
    path = outerplanar_ham_path(fan, 5, 0)
    check_path(fan, 5, 0, path)


def test_path_rejects_chord_roots():
    g = build_graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    with pytest.raises(GraphError):
        outerplanar_ham_path(g, 0, 3)


def test_path_rejects_non_outerplanar():
    with pytest.raises(GraphError, match="outerplanar"):
        outerplanar_ham_path(complete_graph(4), 0, 1)
    with pytest.raises(GraphError, match="2-connected"):
        outerplanar_ham_path(path_graph(4), 0, 1)


def test_path_minus_y():
    rng = random.Random(22)
    for _ in range(100):
        g = random_outerplanar_block(rng, rng.randint(3, 10))
        cyc = outer_cycle(g)
        x, y = cyc[0], cyc[1]
        p = outerplanar_ham_path_minus(g, x, y)
        assert p.vertices[0] == x and y not in p.vertices
        assert sorted(p.vertices + (y,)) == list(range(g.n))
        assert p.is_path_of(g)


def test_path_minus_two_vertices():
    p = outerplanar_ham_path_minus(build_graph(2, [(0, 1)]), 0, 1)
    assert p.vertices == (0,) and p.terminal == 0
