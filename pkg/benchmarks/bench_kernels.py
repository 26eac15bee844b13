"""Compare the numba kernels with the pure-Python fallback.

Each workload runs in a fresh interpreter, once with numba and once with
MINORHAM_DISABLE_NUMBA=1, so nested kernel calls use the same path.  The
compiled run is warmed up first; both runs must produce the same digest.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--only canon,ham]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "canon": "canonical labelling of the 257 polyhedra on 8 vertices",
    "ham": "Hamilton search over the 257 polyhedra on 8 vertices, plus Herschel",
    "k2t": "K2,5 search over the 257 polyhedra on 8 vertices, plus G_1..G_3 for K2,6",
    "closure": "one edge-deletion level below the 9-vertex triangulations",
    "connectivity": "vertex connectivity of the 257 polyhedra on 8 vertices",
}

RUNNER = r"""
import hashlib, json, sys, time
import numpy as np
from minorham.enumerate import _rows, _triangulation_rotations, closure_children, iter_3c_planar_levels
from minorham.canon import canonical_masks
from minorham.hamilton import ham_cycle_search
from minorham.minors import k2t_search
from minorham.families import g_k, herschel
from minorham.topology.connectivity import connectivity_kernel

name, repeat = sys.argv[1], int(sys.argv[2])
codes = [c for _, level in iter_3c_planar_levels(8) for c in level]
rows = _rows(codes)

def canon():
    return [canonical_masks(r).tolist() for r in rows]

def ham():
    out = [bool(ham_cycle_search(r)[0]) for r in rows]
    out.append(int(ham_cycle_search(herschel().masks)[2]))
    return out

def k2t():
    out = [int(k2t_search(r, 5, -1, -1)[0]) for r in rows]
    out += [int(k2t_search(g_k(k).masks, 6, -1, -1)[3]) for k in (1, 2, 3)]
    return out

tri = _rows([c for c, _ in _triangulation_rotations(9)])

def closure():
    return np.unique(closure_children(tri), axis=0).tolist()

def connectivity():
    return [int(connectivity_kernel(r, 8)) for r in rows]

fn = globals()[name]
result = fn()
best = float("inf")
for _ in range(repeat):
    t = time.perf_counter()
    result = fn()
    best = min(best, time.perf_counter() - t)
digest = hashlib.sha256(json.dumps(result).encode()).hexdigest()[:16]
print(json.dumps({"seconds": best, "digest": digest}))
"""


def run(name: str, repeat: int, disable: bool) -> dict:
    env = dict(os.environ)
    env.pop("MINORHAM_DISABLE_NUMBA", None)
    if disable:
        env["MINORHAM_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", RUNNER, name, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--only", help="comma-separated subset of " + ",".join(WORKLOADS))
    args = ap.parse_args()
    names = args.only.split(",") if args.only else list(WORKLOADS)
    print(f"{'workload':<14}{'numba (s)':>12}{'python (s)':>12}{'speedup':>10}  agree")
    mismatch = False
    for name in names:
        fast = run(name, args.repeat, disable=False)
        slow = run(name, 1, disable=True)
        same = fast["digest"] == slow["digest"]
        mismatch |= not same
        speedup = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("inf")
        print(f"{name:<14}{fast['seconds']:>12.4f}{slow['seconds']:>12.4f}{speedup:>9.1f}x  {'yes' if same else 'NO'}")
    return 1 if mismatch else 0


if __name__ == "__main__":
    sys.exit(main())
