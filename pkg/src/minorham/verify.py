"""Replay every mechanically checkable claim and collect a pass/fail matrix.

Each item records a counterexample in graph6 on failure, together with a
single-graph command that reproduces it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .canon import canonical_code
from .enumerate import CountReport, all_graphs, count_k25_free
from .families import g_k, herschel, petersen, prism_with_chords
from .g6 import from_graph6, to_graph6
from .graph import Graph, add_edge, build_graph
from .hamilton import (
    find_tough_cut,
    is_hamiltonian,
    iter_cycles,
    longest_cycle,
    outerplanar_ham_path,
    outerplanar_ham_path_minus,
)
from .minors import enumerate_k2t_models, find_k2t_model, find_rooted_k22, has_k2t_minor
from .random_graphs import random_outerplanar_block, random_reduction_fixture
from .reductions import lift_cycle, verify_trace
from .topology import is_3_connected, is_block, is_planar, outer_cycle, xy_outerplanar_embedding
from .topology.connectivity import vertex_connectivity

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

G_TABLE = {7: 31, 8: 194, 9: 918, 10: 3278, 11: 8346, 12: 18154}
TOTAL_3C_PLANAR = {4: 1, 5: 2, 6: 7, 7: 34, 8: 257, 9: 2606, 10: 32300, 11: 440564}


@dataclass
class Item:
    claim: str
    anchor: str
    status: str
    details: str = ""
    graph6: str | None = None
    command: str | None = None
    seconds: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        out = {"claim": self.claim, "anchor": self.anchor, "status": self.status, "details": self.details}
        if self.graph6 is not None:
            out["graph6"] = self.graph6
            out["command"] = self.command
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class VerificationMatrix:
    level: str
    items: list[Item] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.status != FAIL for i in self.items)

    def to_json(self, timing: bool = False) -> dict:
        return {"schema": 1, "kind": "VerificationMatrix", "level": self.level, "ok": self.ok,
                "items": [i.to_json(timing) for i in self.items]}

    def to_text(self) -> str:
        lines = []
        for i in self.items:
            lines.append(f"{i.claim:<4} {i.status:<7} {i.anchor}: {i.details}")
            if i.graph6 is not None:
                lines.append(f"       counterexample {i.graph6}  reproduce: {i.command}")
        return "\n".join(lines)


class _Failure(Exception):
    def __init__(self, details: str, g: Graph | None = None, command: str = "props"):
        super().__init__(details)
        self.details = details
        self.graph = g
        self.command = command


def _require(cond: bool, details: str, g: Graph | None = None, command: str = "props") -> None:
    if not cond:
        raise _Failure(details, g, command)


def _run(claim: str, anchor: str, fn: Callable[[], str]) -> Item:
    start = time.perf_counter()
    try:
        details = fn()
        item = Item(claim, anchor, PASS, details)
    except _Failure as exc:
        item = Item(claim, anchor, FAIL, exc.details)
        if exc.graph is not None:
            code = to_graph6(exc.graph).decode()
            item.graph6 = code
            item.command = f"echo '{code}' | minorham {exc.command}"
    item.seconds = time.perf_counter() - start
    return item


@lru_cache(maxsize=None)
def _report(n: int) -> CountReport:
    return count_k25_free(n, all_hamiltonian=True)


def check_g_table(max_n: int) -> str:
    found = []
    for n in range(7, max_n + 1):
        r = _report(n)
        _require(r.total_3c_planar == TOTAL_3C_PLANAR[n], f"n={n}: {r.total_3c_planar} 3-connected planar graphs")
        _require(r.k25_free == G_TABLE[n], f"g({n}) = {r.k25_free}, expected {G_TABLE[n]}")
        found.append(f"g({n})={r.k25_free}")
    return ", ".join(found)


def check_k25_free_hamiltonian(max_n: int) -> str:
    parts = []
    for n in range(4, max_n + 1):
        r = _report(n)
        if r.non_hamiltonian_k25_free:
            raise _Failure(f"n={n}: non-Hamiltonian K2,5-free graph", from_graph6(r.non_hamiltonian_k25_free[0]), "ham")
        parts.append(f"{r.k25_free_hamiltonian}/{r.k25_free}")
    return f"n=4..{max_n}: " + " ".join(parts)


def check_herschel_minimality(max_n: int, h: Graph, herschel_order: bool) -> str:
    _require(h.n == 11 and h.m == 18, f"herschel has {h.n} vertices and {h.m} edges", h)
    _require(is_planar(h), "herschel is not planar", h)
    _require(vertex_connectivity(h) == 3, f"herschel connectivity is {vertex_connectivity(h)}, not 3", h)
    _require(not is_hamiltonian(h), "herschel is Hamiltonian", h, "ham")
    counts = []
    for n in range(4, max_n + 1):
        r = _report(n)
        if r.non_hamiltonian:
            raise _Failure(f"n={n}: a non-Hamiltonian 3-connected planar graph", from_graph6(r.non_hamiltonian[0]), "ham")
        counts.append(r.total_3c_planar)
    details = f"all {sum(counts)} classes with n <= {max_n} Hamiltonian"
    if herschel_order:
        r = _report(11)
        code = canonical_code(h).decode()
        _require(code in r.non_hamiltonian, "herschel's code is missing from the n=11 non-Hamiltonian classes", h)
        details += f"; n=11 has {len(r.non_hamiltonian)} non-Hamiltonian classes including herschel"
    return details


def check_herschel_models() -> str:
    h = herschel()
    models = enumerate_k2t_models(h, 5)
    _require(bool(models), "no K2,5 model in herschel", h, "minor --t 5")
    deg4 = {v for v in range(h.n) if h.degree(v) == 4}
    for m in models:
        _require(m.R1 | m.R2 | m.S == frozenset(range(h.n)), "model does not cover V", h, "minor --t 5")
        _require(len(m.R1 & deg4) == 1 and len(m.R2 & deg4) == 1, "side without exactly one degree-4 vertex", h)
        _require(not any(h.has_edge(a, b) for a in m.R1 for b in m.R2), "edge between R1 and R2", h)
    return f"{len(models)} models, each covers V with one degree-4 vertex per side and no R1-R2 edge"


def check_gk(ks) -> str:
    for k in ks:
        g = g_k(k)
        _require(is_planar(g), f"G_{k} not planar", g)
        _require(is_3_connected(g), f"G_{k} not 3-connected", g)
        _require(not is_hamiltonian(g), f"G_{k} Hamiltonian", g, "ham")
        _require(find_k2t_model(g, 6) is None, f"G_{k} has a K2,6 minor", g, "minor --t 6")
        cut = find_tough_cut(g, 5)
        _require(cut is not None and len(cut.cut) == 5 and cut.component_count == 6,
                 f"G_{k}: no 5-vertex cut with 6 components", g, "ham --certificate")
    return f"k={min(ks)}..{max(ks)}: planar, 3-connected, non-Hamiltonian, K2,6-free, tough cut 5/6"


def check_petersen() -> str:
    p = petersen()
    _require(not is_planar(p), "petersen planar", p)
    _require(vertex_connectivity(p) == 3, "petersen connectivity differs from 3", p)
    _require(not is_hamiltonian(p), "petersen Hamiltonian", p, "ham")
    lc = longest_cycle(p)
    _require(lc is not None and len(lc) == 9, "petersen longest cycle is not 9", p, "ham")
    _require(not has_k2t_minor(p, 5), "petersen has a K2,5 minor", p, "minor --t 5")
    return "nonplanar, 3-connected, non-Hamiltonian, circumference 9, K2,5-free"


def check_rooted_k22(max_n: int) -> str:
    pairs = 0
    for n in range(2, max_n + 1):
        for g in all_graphs(n):
            for x in range(n):
                for y in range(n):
                    if x == y:
                        continue
                    h = g if g.has_edge(x, y) else add_edge(g, (x, y))
                    if not is_block(h):
                        continue
                    pairs += 1
                    absent = find_rooted_k22(g, x, y) is None
                    present = xy_outerplanar_embedding(g, x, y) is not None
                    _require(absent == present, f"roots ({x}, {y}) disagree", g, f"minor --t 2 --roots {x},{y}")
    return f"{pairs} rooted instances with n <= {max_n}, zero disagreements"


def check_outerplanar_paths(count: int, seed: int = 2) -> str:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 12)
        if n == 2:
            g = build_graph(2, [(0, 1)])
            p = outerplanar_ham_path_minus(g, 0, 1)
            _require(p.vertices == (0,), "two-vertex case does not end at x", g)
            continue
        g = random_outerplanar_block(rng, n)
        cyc = outer_cycle(g)
        i = rng.randrange(n)
        x, y = cyc[i], cyc[(i + 1) % n]
        if rng.random() < 0.5:
            x, y = y, x
        p = outerplanar_ham_path(g, x, y)
        ok = (p.vertices[:2] == (x, y) and len(p.vertices) == n and p.is_path_of(g)
              and g.degree(p.terminal) == 2)
        _require(ok, f"bad Hamilton path from ({x}, {y})", g)
        q = outerplanar_ham_path_minus(g, x, y)
        ok = (q.vertices[0] == x and sorted(q.vertices) == sorted(set(range(n)) - {y}) and q.is_path_of(g)
              and g.degree(q.terminal) == 2)
        _require(ok, f"bad Hamilton path of g - {y} from {x}", g)
    return f"{count} instances, zero violations"


def check_reductions(count: int, seed: int = 3) -> str:
    rng = random.Random(seed)
    lifted = 0
    for _ in range(count):
        f = random_reduction_fixture(rng, rng.randint(5, 10))
        try:
            verify_trace(f.trace)
        except ValueError as exc:
            raise _Failure(f"trace check failed: {exc}", f.graph, "reduce") from None
        if f.trace.result.n <= 10:
            for z in iter_cycles(f.trace.result):
                _require(len(lift_cycle(f.trace, z)) >= len(z), "lifted cycle shorter", f.graph, "reduce")
                lifted += 1
    return f"{count} fixtures, {lifted} cycles lifted"


def check_prism_growth(ms) -> str:
    parts = []
    for m in ms:
        n = 2 * m
        codes = set()
        for mask in range(1 << m):
            g = prism_with_chords(m, mask)
            _require(is_planar(g) and is_3_connected(g), f"prism m={m} mask={mask} not 3-connected planar", g)
            _require(not has_k2t_minor(g, 5), f"prism m={m} mask={mask} has a K2,5 minor", g, "minor --t 5")
            _require(is_hamiltonian(g), f"prism m={m} mask={mask} not Hamiltonian", g, "ham")
            codes.add(canonical_code(g))
        bound = 2 ** (n / 2) / n
        _require(len(codes) >= bound, f"n={n}: {len(codes)} classes below {bound:.2f}")
        parts.append(f"n={n}:{len(codes)}")
    return " ".join(parts)


def verify_paper(level: str = "quick", fixtures: dict[str, Graph] | None = None) -> VerificationMatrix:
    """Run all ten checks. ``quick`` keeps enumeration to n <= 9; ``full`` goes to n = 10 (11 for Hamiltonicity)."""
    if level not in ("quick", "full"):
        raise ValueError(f"level must be quick or full, got {level!r}")
    full = level == "full"
    h = (fixtures or {}).get("herschel", herschel())
    mx = 10 if full else 9
    checks = [
        ("C1", "g(n) table", lambda: check_g_table(mx)),
        ("C2", "K2,5-free 3-connected planar graphs are Hamiltonian", lambda: check_k25_free_hamiltonian(11 if full else mx)),
        ("C3", "Herschel graph is the smallest non-Hamiltonian polyhedron", lambda: check_herschel_minimality(mx, h, full)),
        ("C4", "K2,5 models of the Herschel graph", check_herschel_models),
        ("C5", "G_k sharpness family", lambda: check_gk(range(1, 5))),
        ("C6", "Petersen graph", check_petersen),
        ("C7", "rooted K2,2 versus xy-outerplanarity", lambda: check_rooted_k22(7 if full else 6)),
        ("C8", "outerplanar Hamilton paths", lambda: check_outerplanar_paths(10_000 if full else 1_000)),
        ("C9", "C-reducibility and cycle lifting", lambda: check_reductions(1_000 if full else 100)),
        ("C10", "exponential growth of the chorded prisms", lambda: check_prism_growth(range(5, 9))),
    ]
    matrix = VerificationMatrix(level)
    for claim, anchor, fn in checks:
        matrix.items.append(_run(claim, anchor, fn))
    return matrix
