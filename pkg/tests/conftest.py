import random

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

from minorham.graph import Graph, build_graph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return build_graph(len(nodes), [(pos[a], pos[b]) for a, b in h.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def atlas():
    """Every graph on at most 7 vertices, one per isomorphism class (networkx atlas)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() > 0]
