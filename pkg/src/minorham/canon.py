"""Exact canonical labelling by colour refinement and individualisation.

The canonical form of a graph is the relabelling whose upper-triangle
adjacency bit string (graph6 column order) is lexicographically largest
among all leaves of the search tree.  The code returned by
:func:`canonical_code` is the graph6 text of that form, so equal codes mean
isomorphic graphs and the code decodes back to a representative.
"""

from __future__ import annotations

import numpy as np

from ._accel import kernel
from .graph import Graph

CanonicalCode = bytes


@kernel
def _key_less(color, cnt, a, b, k):
    if color[a] != color[b]:
        return color[a] < color[b]
    for c in range(k):
        if cnt[a, c] != cnt[b, c]:
            return cnt[a, c] < cnt[b, c]
    return False


@kernel
def _key_equal(color, cnt, a, b, k):
    if color[a] != color[b]:
        return False
    for c in range(k):
        if cnt[a, c] != cnt[b, c]:
            return False
    return True


@kernel
def refine(mat, color):
    """Coarsest equitable refinement of an ordered colouring."""
    n = color.shape[0]
    color = color.copy()
    k = 0
    for v in range(n):
        if color[v] + 1 > k:
            k = color[v] + 1
    order = np.empty(n, dtype=np.int64)
    while True:
        cnt = np.zeros((n, k), dtype=np.int64)
        for u in range(n):
            for v in range(n):
                if mat[u, v]:
                    cnt[u, color[v]] += 1
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            x = order[i]
            j = i - 1
            while j >= 0 and _key_less(color, cnt, x, order[j], k):
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = x
        new = np.empty(n, dtype=np.int64)
        c = 0
        new[order[0]] = 0
        for i in range(1, n):
            if not _key_equal(color, cnt, order[i], order[i - 1], k):
                c += 1
            new[order[i]] = c
        if c + 1 == k:
            return new
        color = new
        k = c + 1


@kernel
def _individualize(color, v):
    n = color.shape[0]
    out = np.empty(n, dtype=np.int64)
    c = color[v]
    for u in range(n):
        if color[u] > c or (color[u] == c and u != v):
            out[u] = color[u] + 1
        else:
            out[u] = color[u]
    return out


@kernel
def _target_cell(color):
    """Smallest colour whose cell has two or more vertices, or -1."""
    n = color.shape[0]
    size = np.zeros(n, dtype=np.int64)
    for v in range(n):
        size[color[v]] += 1
    for c in range(n):
        if size[c] > 1:
            return c
    return -1


@kernel
def _orbit_root(parent, v):
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


@kernel
def canonical_labeling(mat):
    """Return (inv, bits, leaves): ``inv[i]`` is the vertex placed at position i.

    Depth-first search over individualise-and-refine, keeping the leaf with
    the lexicographically largest upper-triangle certificate.  Leaves equal to
    the best one yield automorphisms; a child whose vertex lies in the orbit
    of an already explored sibling, under the automorphisms fixing the current
    prefix, is skipped because its subtree holds the same certificates.
    """
    n = mat.shape[0]
    nbits = n * (n - 1) // 2
    best = np.zeros(nbits, dtype=np.uint8)
    best_inv = np.arange(n)
    leaf = np.empty(nbits, dtype=np.uint8)
    inv = np.empty(n, dtype=np.int64)
    have_best = False
    leaves = 0
    if n <= 1:
        return best_inv, best, 1
    max_gens = 256
    gens = np.empty((max_gens, n), dtype=np.int64)
    ngens = 0
    path = np.full(n + 1, -1, dtype=np.int64)
    explored = np.zeros((n + 1, n), dtype=np.bool_)
    parent = np.empty(n, dtype=np.int64)
    colors = np.zeros((n + 1, n), dtype=np.int64)
    target = np.full(n + 1, -1, dtype=np.int64)
    nextv = np.zeros(n + 1, dtype=np.int64)
    colors[0] = refine(mat, np.zeros(n, dtype=np.int64))
    target[0] = _target_cell(colors[0])
    depth = 0
    while depth >= 0:
        if target[depth] < 0:
            leaves += 1
            for v in range(n):
                inv[colors[depth, v]] = v
            p = 0
            for j in range(1, n):
                for i in range(j):
                    leaf[p] = mat[inv[i], inv[j]]
                    p += 1
            cmp = 1
            if have_best:
                cmp = 0
                for p in range(nbits):
                    if leaf[p] != best[p]:
                        cmp = 1 if leaf[p] > best[p] else -1
                        break
            if cmp > 0:
                have_best = True
                best[:] = leaf
                best_inv[:] = inv
            elif cmp == 0 and ngens < max_gens:
                for i in range(n):
                    gens[ngens, inv[i]] = best_inv[i]
                ngens += 1
            depth -= 1
            continue
        for u in range(n):
            parent[u] = u
        for g in range(ngens):
            fixes = True
            for d in range(depth):
                if gens[g, path[d]] != path[d]:
                    fixes = False
                    break
            if fixes:
                for u in range(n):
                    a = _orbit_root(parent, u)
                    b = _orbit_root(parent, gens[g, u])
                    if a != b:
                        parent[a] = b
        v = nextv[depth]
        while v < n:
            if colors[depth, v] == target[depth]:
                r = _orbit_root(parent, v)
                dup = False
                for w in range(n):
                    if explored[depth, w] and _orbit_root(parent, w) == r:
                        dup = True
                        break
                if not dup:
                    break
            v += 1
        if v >= n:
            depth -= 1
            continue
        nextv[depth] = v + 1
        explored[depth, v] = True
        path[depth] = v
        colors[depth + 1] = refine(mat, _individualize(colors[depth], v))
        depth += 1
        target[depth] = _target_cell(colors[depth])
        nextv[depth] = 0
        explored[depth, :] = False
    return best_inv, best, leaves


def _graph6_from_bits(n: int, bits: np.ndarray) -> bytes:
    from .g6 import encode_n

    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6) @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64) if len(bits) else np.zeros(0, dtype=np.int64)
    return encode_n(n) + bytes((groups + 63).astype(np.uint8).tolist())


def canonical_form(g: Graph) -> tuple[CanonicalCode, list[int]]:
    """Canonical code plus the relabelling ``perm[v]`` realising it."""
    inv, bits, _ = canonical_labeling(g.matrix)
    perm = [0] * g.n
    for pos, v in enumerate(inv):
        perm[int(v)] = pos
    return _graph6_from_bits(g.n, bits), perm


def canonical_code(g: Graph) -> CanonicalCode:
    return canonical_form(g)[0]


def search_leaves(g: Graph) -> int:
    """Number of leaves visited by the labelling search (cost diagnostic)."""
    return int(canonical_labeling(g.matrix)[2])


@kernel
def canonical_masks(masks):
    """Neighbour bitmasks of the canonical form of the graph given by ``masks``."""
    n = masks.shape[0]
    mat = np.zeros((n, n), dtype=np.uint8)
    for u in range(n):
        for v in range(n):
            if (masks[u] >> v) & 1:
                mat[u, v] = 1
    inv, _, _ = canonical_labeling(mat)
    out = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if mat[inv[i], inv[j]]:
                out[i] |= np.int64(1) << j
    return out
