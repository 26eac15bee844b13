"""Planarity testing with rotation-system output.

Blocks are embedded by path addition (Demoucron-Malgrange-Pertuiset): start
from a cycle, repeatedly pick a bridge of the embedded subgraph, and draw a
path of it through a face that contains all of its attachments.  Block
rotations are then concatenated at cutvertices.

Conventions: ``rotation[v]`` is the cyclic neighbour order at ``v``; the
face walk leaving dart ``u -> v`` continues along ``v -> w`` where ``w``
follows ``u`` in ``rotation[v]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..graph import Graph, GraphError, build_graph, connected_components, shortest_path


class EmbeddingError(ValueError):
    """A rotation system that fails the face or Euler checks."""


def _canonical_walk(walk: Sequence[int]) -> tuple[int, ...]:
    if not walk:
        return ()
    best = None
    for i in range(len(walk)):
        rot = tuple(walk[i:]) + tuple(walk[:i])
        if best is None or rot < best:
            best = rot
    return best


def trace_faces(rotation: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    succ = []
    for v, rot in enumerate(rotation):
        d = len(rot)
        succ.append({rot[i]: rot[(i + 1) % d] for i in range(d)})
    seen = set()
    faces = []
    for u, rot in enumerate(rotation):
        for v in rot:
            if (u, v) in seen:
                continue
            walk = []
            a, b = u, v
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                a, b = b, succ[b][a]
            faces.append(tuple(walk))
    return faces


@dataclass(frozen=True)
class PlanarEmbedding:
    rotation: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, ...], ...]
    outer_face: int

    @property
    def n(self) -> int:
        return len(self.rotation)

    @classmethod
    def from_rotation(cls, rotation: Sequence[Sequence[int]], outer_face: int | None = None) -> "PlanarEmbedding":
        rotation = tuple(tuple(r) for r in rotation)
        n = len(rotation)
        for v, rot in enumerate(rotation):
            if len(set(rot)) != len(rot) or v in rot:
                raise EmbeddingError(f"rotation at {v} is not a set of distinct neighbours")
            for w in rot:
                if not 0 <= w < n or v not in rotation[w]:
                    raise EmbeddingError(f"asymmetric rotation entry {v}->{w}")
        m = sum(len(r) for r in rotation) // 2
        if n == 1 and m == 0:
            faces = [(0,)]
        else:
            faces = trace_faces(rotation)
            if any(len(r) == 0 for r in rotation):
                raise EmbeddingError("isolated vertex in a multi-vertex embedding")
        faces = [_canonical_walk(f) for f in faces]
        faces.sort()
        if n - m + len(faces) != 2:
            raise EmbeddingError(f"Euler check failed: V={n} E={m} F={len(faces)}")
        if outer_face is None:
            outer_face = min(range(len(faces)), key=lambda i: (-len(faces[i]), faces[i]))
        return cls(rotation, tuple(faces), outer_face)

    @property
    def outer(self) -> tuple[int, ...]:
        return self.faces[self.outer_face]

    def graph(self) -> Graph:
        return build_graph(self.n, [(v, w) for v, r in enumerate(self.rotation) for w in r if v < w])

    def to_text(self) -> str:
        return "".join(f"{v}: {' '.join(map(str, r))}\n" for v, r in enumerate(self.rotation))

    @classmethod
    def from_text(cls, text: str) -> "PlanarEmbedding":
        rows: dict[int, tuple[int, ...]] = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            head, _, rest = line.partition(":")
            rows[int(head)] = tuple(int(t) for t in rest.split())
        if sorted(rows) != list(range(len(rows))):
            raise EmbeddingError("vertex lines must cover 0..n-1")
        return cls.from_rotation([rows[v] for v in range(len(rows))])


@dataclass(frozen=True)
class NonplanarWitness:
    """Edges of a Kuratowski subdivision found by edge-deletion minimisation."""

    kind: str
    edges: tuple[tuple[int, int], ...]
    branch_vertices: tuple[int, ...] = field(default=())


def biconnected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the blocks of g (isolated vertices excluded)."""
    index = [-1] * g.n
    low = [0] * g.n
    counter = 0
    stack: list[tuple[int, int]] = []
    blocks: list[list[int]] = []
    for root in range(g.n):
        if index[root] >= 0 or not g.adj[root]:
            continue
        index[root] = low[root] = counter
        counter += 1
        work = [(root, -1, iter(g.adj[root]))]
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if index[w] < 0:
                    stack.append((v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    work.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                if w != parent and index[w] < index[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] >= index[parent]:
                    verts = set()
                    while True:
                        e = stack.pop()
                        verts.update(e)
                        if e == (parent, v):
                            break
                    blocks.append(sorted(verts))
    return blocks


def _embed_block(g: Graph) -> list[list[int]] | None:
    """Oriented face cycles of a 2-connected graph, or None if nonplanar."""
    u = 0
    v = g.adj[0][0]
    back = shortest_path(_without_edge(g, u, v), [v], [u])
    cycle = back  # v ... u, closed by edge u-v
    faces = [list(cycle), list(reversed(cycle))]
    in_h = set(cycle)
    h_edges = {frozenset((cycle[i], cycle[(i + 1) % len(cycle)])) for i in range(len(cycle))}
    total = g.m
    while len(h_edges) < total:
        fragments = []
        for a, b in g.edges():
            if a in in_h and b in in_h and frozenset((a, b)) not in h_edges:
                fragments.append(("chord", (a, b), {a, b}))
        for comp in connected_components(g, in_h):
            att = {w for x in comp for w in g.adj[x] if w in in_h}
            fragments.append(("comp", comp, att))
        choice = None
        for frag in fragments:
            ok = [i for i, f in enumerate(faces) if frag[2] <= set(f)]
            if not ok:
                return None
            if choice is None or (len(ok) == 1 and len(choice[1]) > 1):
                choice = (frag, ok)
                if len(ok) == 1:
                    break
        frag, ok = choice
        kind, body, att = frag
        if kind == "chord":
            path = list(body)
        else:
            a = min(att)
            inner = shortest_path(g, [w for w in g.adj[a] if w in body],
                                  [w for w in body if any(z in att and z != a for z in g.adj[w])],
                                  within=body)
            end = inner[-1]
            b = min(z for z in g.adj[end] if z in att and z != a)
            path = [a] + inner + [b]
        fi = ok[0]
        face = faces[fi]
        a, b = path[0], path[-1]
        i, j = face.index(a), face.index(b)
        L = len(face)
        seg_ab = [face[(i + s) % L] for s in range((j - i) % L + 1)]
        seg_ba = [face[(j + s) % L] for s in range((i - j) % L + 1)]
        mid = path[1:-1]
        faces[fi] = seg_ab + list(reversed(mid))
        faces.append(seg_ba + mid)
        in_h.update(mid)
        for s in range(len(path) - 1):
            h_edges.add(frozenset((path[s], path[s + 1])))
    return faces


def _without_edge(g: Graph, u: int, v: int) -> Graph:
    adj = [set(a) for a in g.adj]
    adj[u].discard(v)
    adj[v].discard(u)
    return Graph(g.n, adj)


def _rotation_from_faces(n: int, faces: list[list[int]]) -> list[list[int]]:
    succ: list[dict[int, int]] = [dict() for _ in range(n)]
    for f in faces:
        L = len(f)
        for i in range(L):
            succ[f[i]][f[i - 1]] = f[(i + 1) % L]
    rotation = []
    for v in range(n):
        if not succ[v]:
            rotation.append([])
            continue
        start = min(succ[v])
        rot = [start]
        w = succ[v][start]
        while w != start:
            rot.append(w)
            w = succ[v][w]
        rotation.append(rot)
    return rotation


def _block_rotations(g: Graph) -> list[list[int]] | None:
    from ..graph import induced_subgraph

    rotation: list[list[int]] = [[] for _ in range(g.n)]
    for block in biconnected_components(g):
        sub, kept = induced_subgraph(g, block)
        if sub.n == 2:
            a, b = kept
            rotation[a].append(b)
            rotation[b].append(a)
            continue
        faces = _embed_block(sub)
        if faces is None:
            return None
        local = _rotation_from_faces(sub.n, faces)
        for i, rot in enumerate(local):
            rotation[kept[i]].extend(kept[w] for w in rot)
    return rotation


def is_planar(g: Graph) -> bool:
    return _block_rotations(g) is not None


def kuratowski_witness(g: Graph) -> NonplanarWitness:
    """Edge-minimal nonplanar subgraph of a nonplanar graph."""
    if is_planar(g):
        raise ValueError("graph is planar")
    edges = g.edges()
    keep = list(edges)
    for e in edges:
        trial = [f for f in keep if f != e]
        if not is_planar(build_graph(g.n, trial)):
            keep = trial
    deg: dict[int, int] = {}
    for a, b in keep:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    branch = tuple(sorted(v for v, d in deg.items() if d >= 3))
    kind = "K5" if len(branch) == 5 else "K3,3"
    return NonplanarWitness(kind, tuple(keep), branch)


def planar_embedding(g: Graph) -> PlanarEmbedding | NonplanarWitness:
    """Rotation system of a connected planar graph, or a Kuratowski witness."""
    if g.n == 0:
        raise GraphError("empty graph")
    if len(connected_components(g)) > 1:
        raise GraphError("planar_embedding needs a connected graph")
    rotation = _block_rotations(g)
    if rotation is None:
        return kuratowski_witness(g)
    return PlanarEmbedding.from_rotation(rotation)


def cycle_interior(emb: PlanarEmbedding, cycle: Sequence[int]) -> tuple[Graph, list[int]]:
    """The subgraph formed by a cycle and everything on its side away from the outer face.

    Faces are grouped through edges off the cycle; the group without the
    outer face is the inside.  Returns the subgraph (densely renumbered) and
    the original id of each of its vertices.
    """
    L = len(cycle)
    on_cycle = {(min(cycle[i], cycle[i - 1]), max(cycle[i], cycle[i - 1])) for i in range(L)}
    parent = list(range(len(emb.faces)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    owner: dict[tuple[int, int], int] = {}
    for idx, face in enumerate(emb.faces):
        k = len(face)
        for i in range(k):
            e = (min(face[i], face[(i + 1) % k]), max(face[i], face[(i + 1) % k]))
            if e in on_cycle:
                continue
            if e in owner:
                parent[find(idx)] = find(owner[e])
            else:
                owner[e] = idx
    outside = find(emb.outer_face)
    edges = set(on_cycle)
    for idx, face in enumerate(emb.faces):
        if find(idx) != outside:
            k = len(face)
            edges.update((min(face[i], face[(i + 1) % k]), max(face[i], face[(i + 1) % k])) for i in range(k))
    kept = sorted({v for e in edges for v in e})
    pos = {v: i for i, v in enumerate(kept)}
    return build_graph(len(kept), [(pos[a], pos[b]) for a, b in edges]), kept
