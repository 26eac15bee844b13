"""Named graphs and families: Herschel, Goldner-Harary, G_k, chorded prisms."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .graph import Graph, GraphError, build_graph

HERSCHEL_LABELS = ("u1", "u2", "u3", "u4", "u5", "u6", "u7", "x", "y", "z", "v1")

# Adjacency of the Herschel graph by the neighbourhoods of its five
# "hub" vertices; every edge joins {x, u5, z, u4, y} to the other six.
HERSCHEL_NEIGHBORS = {
    "x": ("u1", "u2", "u3", "v1"),
    "u5": ("u1", "u2", "u6", "u7"),
    "z": ("u3", "u6", "u7", "v1"),
    "u4": ("u1", "u3", "u6"),
    "y": ("u2", "u7", "v1"),
}

# order-3 automorphism (u4)(u1 u6 u3)(x u5 z)(u2 u7 v1)(y)
HERSCHEL_AUTOMORPHISM = {
    "u1": "u6", "u6": "u3", "u3": "u1",
    "x": "u5", "u5": "z", "z": "x",
    "u2": "u7", "u7": "v1", "v1": "u2",
    "u4": "u4", "y": "y",
}

# the nine face diagonals added to herschel() to triangulate it; reproduced by
# goldner_harary_augmentation()
GOLDNER_HARARY_DIAGONALS = (
    ("u4", "u5"), ("u5", "x"), ("u4", "x"), ("u5", "y"), ("x", "y"),
    ("x", "z"), ("u4", "z"), ("u5", "z"), ("y", "z"),
)


def herschel() -> Graph:
    ix = {name: i for i, name in enumerate(HERSCHEL_LABELS)}
    edges = [(ix[a], ix[b]) for a, nbrs in HERSCHEL_NEIGHBORS.items() for b in nbrs]
    return build_graph(len(HERSCHEL_LABELS), edges, HERSCHEL_LABELS)


def g_k(k: int) -> Graph:
    """Herschel graph with v1 stretched into the path v1..vk, every vi joined to y."""
    if k < 1:
        raise GraphError(f"k must be at least 1, got {k}")
    labels = list(HERSCHEL_LABELS[:-1]) + [f"v{i}" for i in range(1, k + 1)]
    ix = {name: i for i, name in enumerate(labels)}
    edges = []
    for a, nbrs in HERSCHEL_NEIGHBORS.items():
        for b in nbrs:
            if b != "v1":
                edges.append((ix[a], ix[b]))
    edges.append((ix["x"], ix["v1"]))
    edges.append((ix["z"], ix[f"v{k}"]))
    for i in range(1, k + 1):
        edges.append((ix["y"], ix[f"v{i}"]))
        if i < k:
            edges.append((ix[f"v{i}"], ix[f"v{i + 1}"]))
    return build_graph(len(labels), edges, labels)


def goldner_harary_augmentation() -> list[tuple[str, str]]:
    """Search the 2^9 diagonal choices in the quadrilateral faces of herschel().

    Returns the first choice (faces in sorted order, first diagonal preferred)
    giving a simple non-Hamiltonian triangulation.
    """
    from .hamilton import is_hamiltonian
    from .topology.planarity import PlanarEmbedding, planar_embedding

    h = herschel()
    emb = planar_embedding(h)
    assert isinstance(emb, PlanarEmbedding)
    faces = emb.faces
    if any(len(f) != 4 for f in faces):
        raise AssertionError("herschel faces should all be quadrilaterals")
    for choice in product((0, 1), repeat=len(faces)):
        diag = [tuple(sorted((f[c], f[c + 2]))) for f, c in zip(faces, choice)]
        if len(set(diag)) != len(diag) or any(h.has_edge(a, b) for a, b in diag):
            continue
        g = build_graph(h.n, h.edges() + diag, h.labels)
        if not is_hamiltonian(g):
            return [(h.labels[a], h.labels[b]) for a, b in diag]
    raise AssertionError("no non-Hamiltonian triangulation of the Herschel embedding")


def goldner_harary() -> Graph:
    h = herschel()
    diag = [(h.index(a), h.index(b)) for a, b in GOLDNER_HARARY_DIAGONALS]
    return build_graph(h.n, h.edges() + diag, h.labels)


def prism_with_chords(m: int, mask: int | list[int] | tuple[int, ...] = 0) -> Graph:
    """C_m x K_2 with the diagonal bottom_i - top_{i+1} in quadrilateral i when bit i is set.

    Vertices 0..m-1 are the top cycle, m..2m-1 the bottom cycle.
    """
    if m < 3:
        raise GraphError(f"prism needs m >= 3, got {m}")
    if isinstance(mask, (list, tuple)):
        if len(mask) != m:
            raise GraphError(f"mask must have length {m}")
        bits = [int(b) for b in mask]
    else:
        if not 0 <= mask < (1 << m):
            raise GraphError(f"mask {mask} out of range for m={m}")
        bits = [(mask >> i) & 1 for i in range(m)]
    edges = []
    for i in range(m):
        j = (i + 1) % m
        edges += [(i, j), (m + i, m + j), (i, m + i)]
        if bits[i]:
            edges.append((m + i, j))
    return build_graph(2 * m, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def wheel(rim: int) -> Graph:
    """Hub 0 joined to the cycle 1..rim."""
    if rim < 3:
        raise GraphError(f"wheel needs a rim of at least 3, got {rim}")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return build_graph(rim + 1, edges)


def complete_bipartite(s: int, t: int) -> Graph:
    if s < 1 or t < 1:
        raise GraphError("both sides must be non-empty")
    return build_graph(s + t, [(a, s + b) for a in range(s) for b in range(t)])


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: dict = field(default_factory=dict)


def named_graph(spec: FamilySpec) -> Graph:
    name, p = spec.name, dict(spec.params)
    try:
        if name == "herschel":
            return herschel()
        if name == "goldner-harary":
            return goldner_harary()
        if name == "gk":
            return g_k(int(p["k"]))
        if name == "prism-chords":
            return prism_with_chords(int(p["m"]), p.get("mask", 0))
        if name == "petersen":
            return petersen()
        if name == "wheel":
            return wheel(int(p["n"]))
        if name == "complete-bipartite":
            return complete_bipartite(int(p.get("s", 2)), int(p["t"]))
    except KeyError as exc:
        raise GraphError(f"family {name!r} is missing parameter {exc.args[0]!r}") from None
    raise GraphError(f"unknown family {name!r}")


FAMILY_NAMES = ("herschel", "goldner-harary", "gk", "prism-chords", "petersen", "wheel", "complete-bipartite")
