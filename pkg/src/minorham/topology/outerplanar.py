"""Outerplanarity and xy-outerplanarity via the apex construction."""

from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph, GraphError, add_edge, connected_components
from .connectivity import is_block
from .planarity import PlanarEmbedding, planar_embedding


@dataclass(frozen=True)
class OuterplaneEmbedding:
    """Embedding with every vertex on ``embedding.outer``.

    ``outer_path`` is the Hamilton path on the disk boundary for
    xy-outerplane embeddings and ``None`` for plain outerplane ones.
    """

    embedding: PlanarEmbedding
    outer_path: tuple[int, ...] | None = None


def _with_apex(g: Graph) -> Graph:
    apex = g.n
    adj = [list(a) + [apex] for a in g.adj]
    adj.append(list(range(g.n)))
    return Graph(g.n + 1, adj)


def _strip_apex(rotation, apex: int, drop_edge: tuple[int, int] | None = None) -> PlanarEmbedding:
    """Remove the apex (and optionally one edge) and locate the outer face."""
    anchor = None
    rot_g = []
    for v, rot in enumerate(rotation[:apex]):
        i = rot.index(apex)
        d = len(rot)
        p, q = rot[(i - 1) % d], rot[(i + 1) % d]
        if anchor is None and (drop_edge is None or v not in drop_edge) and p != apex:
            anchor = (p, v, q)
        r = [w for w in rot if w != apex]
        if drop_edge is not None and v in drop_edge:
            other = drop_edge[1] if v == drop_edge[0] else drop_edge[0]
            r = [w for w in r if w != other]
        rot_g.append(r)
    if apex == 1:
        return PlanarEmbedding.from_rotation([[]])
    emb = PlanarEmbedding.from_rotation(rot_g)
    p, v, q = anchor
    for idx, face in enumerate(emb.faces):
        L = len(face)
        for i in range(L):
            if face[i] == v and face[i - 1] == p and face[(i + 1) % L] == q:
                return PlanarEmbedding(emb.rotation, emb.faces, idx)
    raise AssertionError("apex angle not found among faces")


def outerplanar_embedding(g: Graph) -> OuterplaneEmbedding | None:
    """Outerplane embedding of a connected graph, or None if not outerplanar."""
    if g.n == 0 or len(connected_components(g)) > 1:
        raise GraphError("outerplanar_embedding needs a connected graph")
    res = planar_embedding(_with_apex(g))
    if not isinstance(res, PlanarEmbedding):
        return None
    emb = _strip_apex(res.rotation, g.n)
    return OuterplaneEmbedding(emb)


def is_outerplanar(g: Graph) -> bool:
    return outerplanar_embedding(g) is not None


def outer_cycle(g: Graph) -> list[int]:
    """Boundary cycle of a 2-connected outerplanar graph (its unique Hamilton cycle)."""
    if g.n < 3 or not is_block(g):
        raise GraphError("outer cycle needs a 2-connected graph")
    res = planar_embedding(_with_apex(g))
    if not isinstance(res, PlanarEmbedding):
        raise GraphError("graph is not outerplanar")
    return list(res.rotation[g.n])


def xy_outerplanar_embedding(g: Graph, x: int, y: int) -> OuterplaneEmbedding | None:
    """Embedding with a Hamilton x-y path on the boundary, or None."""
    if x == y:
        raise GraphError("x and y must differ")
    if g.n == 2:
        # the boundary path is the (possibly added) edge xy
        rot = [[1], [0]]
        return OuterplaneEmbedding(PlanarEmbedding.from_rotation(rot), (x, y))
    h = g if g.has_edge(x, y) else add_edge(g, (x, y))
    if not is_block(h):
        return None
    res = planar_embedding(_with_apex(h))
    if not isinstance(res, PlanarEmbedding):
        return None
    cyc = list(res.rotation[h.n])
    L = len(cyc)
    i = cyc.index(x)
    if cyc[(i + 1) % L] == y:
        path = [cyc[(i - s) % L] for s in range(L)]
    elif cyc[(i - 1) % L] == y:
        path = [cyc[(i + s) % L] for s in range(L)]
    else:
        return None
    drop = None if g.has_edge(x, y) else (x, y)
    emb = _strip_apex(res.rotation, h.n, drop)
    return OuterplaneEmbedding(emb, tuple(path))
