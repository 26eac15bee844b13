"""Isomorph-free generation of planar triangulations and 3-connected planar graphs.

Triangulations on n vertices come from those on n - 1 by splitting a vertex
along two of its neighbours.  Every 3-connected planar graph is a spanning
subgraph of a triangulation on the same vertices, and deleting the missing
edges one at a time never leaves the class, so the 3-connected planar graphs
with m edges are exactly the graphs G - e (G with m + 1 edges, G - e still
3-connected).  Generation therefore walks down one edge count at a time,
deduplicating each level by canonical form.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np

from ._accel import kernel
from .canon import canonical_form, canonical_masks
from .g6 import from_graph6, to_graph6
from .graph import Graph, graph_from_masks
from .hamilton import ham_cycle_search
from .minors import k2t_search
from .topology.connectivity import deletable_edges_3c

CHECKPOINT_SCHEMA = 1
FILTERS = ("none", "k25-free", "k26-free")


@kernel
def closure_children(parents):
    """Canonical masks of every G - e over the rows of ``parents`` (duplicates kept)."""
    rows, n = parents.shape
    out = np.empty((rows * n * 3, n), dtype=np.int64)
    cnt = 0
    for r in range(rows):
        masks = parents[r]
        edges = deletable_edges_3c(masks)
        for k in range(edges.shape[0]):
            u = edges[k, 0]
            v = edges[k, 1]
            child = masks.copy()
            child[u] &= ~(np.int64(1) << v)
            child[v] &= ~(np.int64(1) << u)
            out[cnt] = canonical_masks(child)
            cnt += 1
    return out[:cnt]


@kernel
def batch_k2t_free(rows, t):
    out = np.empty(rows.shape[0], dtype=np.bool_)
    for r in range(rows.shape[0]):
        R1, _, _, _ = k2t_search(rows[r], t, -1, -1)
        out[r] = R1 == 0
    return out


@kernel
def batch_hamiltonian(rows):
    out = np.empty(rows.shape[0], dtype=np.bool_)
    for r in range(rows.shape[0]):
        found, _, _, _ = ham_cycle_search(rows[r])
        out[r] = found
    return out


def _unique_rows(a: np.ndarray) -> np.ndarray:
    if a.shape[0] == 0:
        return a
    return np.unique(a, axis=0)


def _code_order(rows: np.ndarray) -> list[bytes]:
    return sorted(to_graph6(graph_from_masks(r)) for r in rows)


# ---------------------------------------------------------------- triangulations

def _k4_rotation() -> list[list[int]]:
    # a consistent rotation system of the tetrahedron
    return [[1, 2, 3], [0, 3, 2], [0, 1, 3], [0, 2, 1]]


def _split(rot: list[list[int]], v: int, i: int, j: int) -> list[list[int]]:
    """Split v: the new vertex takes the neighbour arc w_i..w_j, v keeps w_j..w_i."""
    w = rot[v]
    d = len(w)
    u = len(rot)
    arc = [w[(i + s) % d] for s in range((j - i) % d + 1)]
    keep = [w[(j + s) % d] for s in range((i - j) % d + 1)]
    new = [list(r) for r in rot]
    new.append(arc + [v])
    new[v] = keep + [u]
    wi, wj = arc[0], arc[-1]
    for x in arc[1:-1]:
        r = new[x]
        r[r.index(v)] = u
    r = new[wi]
    r.insert(r.index(v), u)
    r = new[wj]
    r.insert(r.index(v) + 1, u)
    return new


def _rotation_graph(rot: list[list[int]]) -> Graph:
    return Graph(len(rot), [sorted(r) for r in rot])


def _canonical_rotation(rot: list[list[int]]) -> tuple[bytes, list[list[int]]]:
    code, perm = canonical_form(_rotation_graph(rot))
    out: list[list[int]] = [[] for _ in rot]
    for v, r in enumerate(rot):
        out[perm[v]] = [perm[w] for w in r]
    return code, out


def _triangulation_rotations(n: int) -> list[tuple[bytes, list[list[int]]]]:
    level = [_canonical_rotation(_k4_rotation())]
    for _ in range(5, n + 1):
        found: dict[bytes, list[list[int]]] = {}
        for _, rot in level:
            for v in range(len(rot)):
                d = len(rot[v])
                for i in range(d):
                    for j in range(i + 1, d):
                        code, crot = _canonical_rotation(_split(rot, v, i, j))
                        found.setdefault(code, crot)
        level = sorted(found.items())
    return level


def generate_triangulations(n: int) -> Iterator[Graph]:
    """One maximal planar graph per isomorphism class on n >= 4 vertices, in code order."""
    if n < 4:
        raise ValueError(f"triangulations need n >= 4, got {n}")
    for code, _ in _triangulation_rotations(n):
        yield from_graph6(code)


# ---------------------------------------------------------------- 3-connected planar

@dataclass
class GenerationCheckpoint:
    """State at a level boundary: every graph with more than ``edges`` edges is emitted.

    ``seen`` holds the codes of all emitted graphs and ``frontier`` the codes
    of the last completed level, the parents of the next one.
    """

    order: int
    edges: int
    seen: list[str]
    frontier: list[str]
    counters: dict = field(default_factory=dict)
    schema: int = CHECKPOINT_SCHEMA

    def save(self, path: Path) -> None:
        tmp = Path(str(path) + ".tmp")
        tmp.write_text(json.dumps(asdict(self), sort_keys=True))
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: Path) -> "GenerationCheckpoint":
        data = json.loads(Path(path).read_text())
        if data.get("schema") != CHECKPOINT_SCHEMA:
            raise ValueError(f"unsupported checkpoint schema {data.get('schema')!r}")
        return cls(**data)


def _checkpoint_path(directory: str | os.PathLike, n: int) -> Path:
    return Path(directory) / f"closure-n{n}.json"


def _expand(parents: np.ndarray, workers: int, chunk: int = 4000) -> np.ndarray:
    n = parents.shape[1]
    batches = [parents[i:i + chunk] for i in range(0, parents.shape[0], chunk)]
    if workers > 1 and len(batches) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_expand_batch, batches))
    else:
        parts = [_expand_batch(b) for b in batches]
    parts = [p for p in parts if p.shape[0]]
    if not parts:
        return np.empty((0, n), dtype=np.int64)
    return _unique_rows(np.concatenate(parts))


def _expand_batch(batch: np.ndarray) -> np.ndarray:
    return _unique_rows(closure_children(np.ascontiguousarray(batch)))


def _rows(codes: list[bytes] | list[str]) -> np.ndarray:
    graphs = [from_graph6(c) for c in codes]
    if not graphs:
        return np.empty((0, 0), dtype=np.int64)
    return np.stack([g.masks for g in graphs])


def iter_3c_planar_levels(n: int, workers: int = 1, checkpoint_dir: str | os.PathLike | None = None,
                          ) -> Iterator[tuple[int, list[bytes]]]:
    """Yield (edge count, sorted canonical codes) for each level, densest first."""
    if n < 4:
        raise ValueError(f"3-connected graphs need n >= 4, got {n}")
    if n > 62:
        raise ValueError("orders above 62 do not fit the bitmask kernels")
    ckpt_path = _checkpoint_path(checkpoint_dir, n) if checkpoint_dir else None
    seen: set[bytes] = set()
    levels: dict[str, int] = {}

    def save(m: int, codes: list[bytes]) -> None:
        if ckpt_path is not None:
            GenerationCheckpoint(n, m, sorted(c.decode() for c in seen), [c.decode() for c in codes],
                                 {"levels": dict(levels)}).save(ckpt_path)

    if ckpt_path is not None and ckpt_path.exists():
        state = GenerationCheckpoint.load(ckpt_path)
        if state.order != n:
            raise ValueError(f"checkpoint is for n={state.order}, not {n}")
        seen = {c.encode() for c in state.seen}
        levels = dict(state.counters.get("levels", {}))
        by_edges: dict[int, list[bytes]] = {}
        for code in seen:
            by_edges.setdefault(from_graph6(code).m, []).append(code)
        for m in sorted(by_edges, reverse=True):
            yield m, sorted(by_edges[m])
        codes = sorted(c.encode() for c in state.frontier)
        m = state.edges
    else:
        codes = [code for code, _ in _triangulation_rotations(n)]
        m = 3 * n - 6
        seen.update(codes)
        levels[str(m)] = len(codes)
        save(m, codes)
        yield m, codes
    parents = _rows(codes)
    while parents.shape[0] and m > (3 * n + 1) // 2:
        children = _expand(parents, workers)
        codes = _code_order(children)
        m -= 1
        if not codes:
            break
        seen.update(codes)
        levels[str(m)] = len(codes)
        save(m, codes)
        yield m, codes
        parents = children


def generate_3c_planar(n: int, workers: int = 1, checkpoint_dir: str | os.PathLike | None = None) -> Iterator[Graph]:
    """One 3-connected planar graph per isomorphism class on n vertices.

    Output order is by decreasing edge count, then by canonical code, and does
    not depend on ``workers``.  Each graph is its own canonical form.
    """
    for _, codes in iter_3c_planar_levels(n, workers, checkpoint_dir):
        for code in codes:
            yield from_graph6(code)


@dataclass(frozen=True)
class CountReport:
    n: int
    total_3c_planar: int
    k25_free: int
    k25_free_hamiltonian: int
    elapsed: float
    non_hamiltonian: tuple[str, ...] = ()
    non_hamiltonian_k25_free: tuple[str, ...] = ()

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "schema": 1,
            "kind": "CountReport",
            "n": self.n,
            "total_3c_planar": self.total_3c_planar,
            "k25_free": self.k25_free,
            "k25_free_hamiltonian": self.k25_free_hamiltonian,
            "non_hamiltonian": list(self.non_hamiltonian),
            "non_hamiltonian_k25_free": list(self.non_hamiltonian_k25_free),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def count_k25_free(n: int, workers: int = 1, checkpoint_dir: str | os.PathLike | None = None,
                   all_hamiltonian: bool = False) -> CountReport:
    """Count 3-connected planar graphs on n vertices, those without a K_{2,5} minor,
    and the Hamiltonian ones among the latter.

    With ``all_hamiltonian`` every graph (not only the K_{2,5}-free ones) is
    tested, and the codes of all non-Hamiltonian graphs are reported.
    """
    start = time.perf_counter()
    total = free = free_ham = 0
    non_ham: list[bytes] = []
    non_ham_free: list[bytes] = []
    for _, codes in iter_3c_planar_levels(n, workers, checkpoint_dir):
        rows = _rows(codes)
        total += len(codes)
        ok = batch_k2t_free(rows, 5)
        free += int(ok.sum())
        if all_hamiltonian:
            ham = batch_hamiltonian(rows)
            non_ham.extend(c for c, h in zip(codes, ham) if not h)
            ham_free = ham[ok]
        else:
            ham_free = batch_hamiltonian(np.ascontiguousarray(rows[ok])) if ok.any() else np.zeros(0, bool)
        free_ham += int(ham_free.sum())
        free_codes = [c for c, keep in zip(codes, ok) if keep]
        non_ham_free.extend(c for c, h in zip(free_codes, ham_free) if not h)
    return CountReport(n, total, free, free_ham, time.perf_counter() - start,
                       tuple(sorted(c.decode() for c in non_ham)),
                       tuple(sorted(c.decode() for c in non_ham_free)))


def filtered_3c_planar(n: int, filter_name: str = "none", workers: int = 1,
                       checkpoint_dir: str | os.PathLike | None = None) -> Iterator[bytes]:
    """Canonical graph6 codes of the 3-connected planar graphs passing ``filter_name``."""
    if filter_name not in FILTERS:
        raise ValueError(f"unknown filter {filter_name!r}")
    for _, codes in iter_3c_planar_levels(n, workers, checkpoint_dir):
        if filter_name == "none":
            yield from codes
            continue
        t = 5 if filter_name == "k25-free" else 6
        ok = batch_k2t_free(_rows(codes), t)
        yield from (c for c, keep in zip(codes, ok) if keep)


# ---------------------------------------------------------------- all graphs

def all_graphs(n: int) -> list[Graph]:
    """Every graph on n >= 1 vertices up to isomorphism, in canonical form and code order.

    Grown one vertex at a time over all neighbourhoods of the new vertex;
    practical for n <= 8.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    level = [canonical_masks(np.zeros(1, dtype=np.int64))]
    for k in range(2, n + 1):
        found: set[bytes] = set()
        rows = []
        for masks in level:
            for sub in range(1 << (k - 1)):
                child = np.zeros(k, dtype=np.int64)
                child[:k - 1] = masks
                child[k - 1] = sub
                for v in range(k - 1):
                    if sub >> v & 1:
                        child[v] |= np.int64(1) << (k - 1)
                cm = canonical_masks(child)
                key = cm.tobytes()
                if key not in found:
                    found.add(key)
                    rows.append(cm)
        level = rows
    graphs = [graph_from_masks(r) for r in level]
    graphs.sort(key=to_graph6)
    return graphs
