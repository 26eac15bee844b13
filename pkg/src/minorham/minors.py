"""K_{2,t} minors through standard models.

A standard model is a pair of disjoint connected branch sets R1, R2 together
with t single vertices S each adjacent to both.  A graph has a K_{2,t} minor
iff it has a standard model, so the search only grows R1 and R2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

import numpy as np

from ._accel import kernel, popcount
from .graph import Graph, GraphError, add_edge, connected_components, induced_subgraph
from .topology.connectivity import is_block


@dataclass(frozen=True)
class StandardModel:
    R1: frozenset[int]
    R2: frozenset[int]
    S: frozenset[int]

    @property
    def t(self) -> int:
        return len(self.S)

    def key(self) -> tuple:
        a, b = sorted((tuple(sorted(self.R1)), tuple(sorted(self.R2))))
        return a, b, tuple(sorted(self.S))

    def to_json(self) -> dict:
        return {"t": self.t, "R1": sorted(self.R1), "R2": sorted(self.R2), "S": sorted(self.S)}

    @classmethod
    def from_json(cls, data: dict | str) -> "StandardModel":
        if isinstance(data, str):
            data = json.loads(data)
        model = cls(frozenset(data["R1"]), frozenset(data["R2"]), frozenset(data["S"]))
        if "t" in data and data["t"] != model.t:
            raise ValueError("t does not match |S|")
        return model


def verify_model(g: Graph, model: StandardModel, roots: tuple[int, int] | None = None) -> bool:
    """Check every standard-model condition against ``g`` directly."""
    R1, R2, S = set(model.R1), set(model.R2), set(model.S)
    if not R1 or not R2 or R1 & R2 or R1 & S or R2 & S:
        return False
    if not all(0 <= v < g.n for v in R1 | R2 | S):
        return False
    for side in (R1, R2):
        sub, _ = induced_subgraph(g, side)
        if len(connected_components(sub)) != 1:
            return False
    for s in S:
        if not (set(g.adj[s]) & R1 and set(g.adj[s]) & R2):
            return False
    if roots is not None and not (roots[0] in R1 and roots[1] in R2):
        return False
    return True


@kernel
def k2t_search(masks, t, root1, root2):
    """Branch and bound for a standard K_{2,t} model.

    Returns (R1, R2, common, nodes) as bitmasks; R1 == 0 means none exists.
    ``root1``/``root2`` >= 0 force membership of R1/R2.
    """
    n = masks.shape[0]
    s1_set = np.zeros(n + 1, dtype=np.int64)
    c1 = np.zeros(n + 1, dtype=np.int64)
    x1 = np.zeros(n + 1, dtype=np.int64)
    nb1 = np.zeros(n + 1, dtype=np.int64)
    s2_set = np.zeros(n + 1, dtype=np.int64)
    c2 = np.zeros(n + 1, dtype=np.int64)
    x2 = np.zeros(n + 1, dtype=np.int64)
    nb2 = np.zeros(n + 1, dtype=np.int64)
    nodes = 0
    lo1 = 0
    hi1 = n
    if root1 >= 0:
        lo1 = root1
        hi1 = root1 + 1
    for seed1 in range(lo1, hi1):
        bit = np.int64(1) << seed1
        excl = (bit - 1) if root1 < 0 else np.int64(0)
        if root2 >= 0:
            excl |= np.int64(1) << root2
        s1_set[0] = bit
        x1[0] = excl | bit
        nb1[0] = masks[seed1]
        c1[0] = masks[seed1] & ~x1[0]
        size1 = 1
        d1 = 0
        visit1 = True
        while d1 >= 0:
            if visit1:
                visit1 = False
                nodes += 1
                R1 = s1_set[d1]
                N1 = nb1[d1] & ~R1
                if popcount(N1) >= t and size1 + 1 + t <= n:
                    lo2 = seed1 + 1
                    hi2 = n
                    if root2 >= 0:
                        lo2 = root2
                        hi2 = root2 + 1
                    for seed2 in range(lo2, hi2):
                        b2 = np.int64(1) << seed2
                        if b2 & R1:
                            continue
                        ex2 = R1 | b2
                        if root2 < 0:
                            ex2 |= b2 - 1
                        s2_set[0] = b2
                        x2[0] = ex2
                        nb2[0] = masks[seed2]
                        c2[0] = masks[seed2] & ~ex2
                        size2 = 1
                        d2 = 0
                        visit2 = True
                        while d2 >= 0:
                            if visit2:
                                visit2 = False
                                nodes += 1
                                R2 = s2_set[d2]
                                common = N1 & nb2[d2] & ~R2
                                if popcount(common) >= t:
                                    return R1, R2, common, nodes
                                if popcount(N1 & ~R2) < t or size1 + size2 + 1 + t > n:
                                    c2[d2] = 0
                            if c2[d2] == 0:
                                d2 -= 1
                                size2 -= 1
                                continue
                            low = c2[d2] & -c2[d2]
                            c2[d2] &= ~low
                            v = 0
                            while (low >> v) != 1:
                                v += 1
                            s2_set[d2 + 1] = s2_set[d2] | low
                            x2[d2 + 1] = x2[d2]
                            nb2[d2 + 1] = nb2[d2] | masks[v]
                            c2[d2 + 1] = c2[d2] | (masks[v] & ~x2[d2] & ~s2_set[d2 + 1])
                            x2[d2] |= low
                            d2 += 1
                            size2 += 1
                            visit2 = True
                if size1 + 2 + t > n:
                    c1[d1] = 0
            if c1[d1] == 0:
                d1 -= 1
                size1 -= 1
                continue
            low = c1[d1] & -c1[d1]
            c1[d1] &= ~low
            v = 0
            while (low >> v) != 1:
                v += 1
            s1_set[d1 + 1] = s1_set[d1] | low
            x1[d1 + 1] = x1[d1]
            nb1[d1 + 1] = nb1[d1] | masks[v]
            c1[d1 + 1] = c1[d1] | (masks[v] & ~x1[d1] & ~s1_set[d1 + 1])
            x1[d1] |= low
            d1 += 1
            size1 += 1
            visit1 = True
    return np.int64(0), np.int64(0), np.int64(0), nodes


def _bits(mask: int) -> frozenset[int]:
    mask = int(mask)
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class SearchResult:
    model: StandardModel | None
    nodes: int


def search_k2t(g: Graph, t: int, roots: tuple[int, int] | None = None) -> SearchResult:
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    r1, r2 = roots if roots is not None else (-1, -1)
    if g.n < t + 2:
        return SearchResult(None, 0)
    R1, R2, common, nodes = k2t_search(g.masks, t, r1, r2)
    if R1 == 0:
        return SearchResult(None, int(nodes))
    S = sorted(_bits(common))[:t]
    return SearchResult(StandardModel(_bits(R1), _bits(R2), frozenset(S)), int(nodes))


def find_k2t_model(g: Graph, t: int) -> StandardModel | None:
    """A standard K_{2,t} model, or None when the exhaustive search finds none."""
    return search_k2t(g, t).model


def has_k2t_minor(g: Graph, t: int) -> bool:
    return find_k2t_model(g, t) is not None


def _connected_sets(g: Graph, seed: int, excluded: int, max_size: int) -> Iterator[tuple[int, int]]:
    """(set, neighbourhood) bitmasks of connected sets containing ``seed``."""
    masks = [int(m) for m in g.masks]
    stack = [(1 << seed, masks[seed], masks[seed] & ~(excluded | (1 << seed)), excluded | (1 << seed), 1)]
    while stack:
        S, nb, cand, excl, size = stack.pop()
        yield S, nb
        if size >= max_size:
            continue
        children = []
        while cand:
            low = cand & -cand
            cand &= ~low
            v = low.bit_length() - 1
            S2 = S | low
            children.append((S2, nb | masks[v], cand | (masks[v] & ~excl & ~S2), excl, size + 1))
            excl |= low
        stack.extend(reversed(children))


def enumerate_k2t_models(g: Graph, t: int) -> list[StandardModel]:
    """Every standard K_{2,t} model, {R1, R2} unordered, sorted by key."""
    if t < 2:
        raise ValueError(f"t must be at least 2, got {t}")
    out = []
    limit = g.n - t - 1
    for s1 in range(g.n):
        for R1, nb1 in _connected_sets(g, s1, (1 << s1) - 1, limit):
            N1 = nb1 & ~R1
            if bin(N1).count("1") < t:
                continue
            size1 = bin(R1).count("1")
            for s2 in range(s1 + 1, g.n):
                if R1 >> s2 & 1:
                    continue
                for R2, nb2 in _connected_sets(g, s2, R1 | ((1 << s2) - 1), g.n - t - size1):
                    common = N1 & nb2 & ~R2
                    cs = sorted(_bits(common))
                    if len(cs) < t:
                        continue
                    for S in combinations(cs, t):
                        out.append(StandardModel(_bits(R1), _bits(R2), frozenset(S)))
    out.sort(key=StandardModel.key)
    return out


def find_rooted_k22(g: Graph, x: int, y: int) -> StandardModel | None:
    """K_{2,2} model with x in R1 and y in R2, or None.

    Requires g + xy to be a block, the setting in which absence of such a
    minor is equivalent to xy-outerplanarity.
    """
    if x == y:
        raise GraphError("roots must differ")
    h = g if g.has_edge(x, y) else add_edge(g, (x, y))
    if not is_block(h):
        raise GraphError("g + xy is not a block")
    return search_k2t(g, 2, roots=(x, y)).model


def naive_k2t(g: Graph, t: int, roots: tuple[int, int] | None = None) -> bool:
    """Oracle: try every pair of disjoint connected vertex subsets."""
    conn = []
    for mask in range(1, 1 << g.n):
        verts = _bits(mask)
        sub, _ = induced_subgraph(g, verts)
        if len(connected_components(sub)) == 1:
            nbrs = set().union(*(g.adj[v] for v in verts)) - verts
            conn.append((verts, nbrs))
    for A, NA in conn:
        if roots and roots[0] not in A:
            continue
        for B, NB in conn:
            if A & B or (roots and roots[1] not in B):
                continue
            if len((NA & NB) - A - B) >= t:
                return True
    return False
