import json
import os
import subprocess
import sys

import numpy as np

from minorham import NUMBA_ENABLED
from minorham.canon import canonical_masks
from minorham.enumerate import count_k25_free
from minorham.families import g_k, herschel
from minorham.hamilton import ham_cycle_search, hamilton_search
from minorham.minors import k2t_search, search_k2t

PROBE = r"""
import json
from minorham import NUMBA_ENABLED, canonical_code
from minorham.enumerate import count_k25_free
from minorham.families import g_k, herschel
from minorham.hamilton import hamilton_search
from minorham.minors import search_k2t
r = count_k25_free(7, all_hamiltonian=True)
ex = hamilton_search(herschel())[1]
print(json.dumps({
    "numba": NUMBA_ENABLED,
    "report": r.to_json(timing=False),
    "herschel": canonical_code(herschel()).decode(),
    "exhaustion": [ex.nodes, ex.transcript],
    "k26_nodes": search_k2t(g_k(2), 6).nodes,
}))
"""


def probe(disable):
    env = dict(os.environ)
    env.pop("MINORHAM_DISABLE_NUMBA", None)
    if disable:
        env["MINORHAM_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_numba_is_active_by_default():
    assert NUMBA_ENABLED
    assert hasattr(ham_cycle_search, "py_func")


def test_pure_python_path_gives_identical_results():
    slow = probe(disable=True)
    fast = probe(disable=False)
    assert slow["numba"] is False and fast["numba"] is True
    assert {k: v for k, v in slow.items() if k != "numba"} == {k: v for k, v in fast.items() if k != "numba"}
    assert fast["herschel"] == "J???~@klEo?"
    assert fast["report"]["k25_free"] == 31


def test_py_func_matches_compiled():
    h = herschel()
    assert ham_cycle_search.py_func(h.masks)[2:] == tuple(ham_cycle_search(h.masks))[2:]
    masks = g_k(2).masks
    assert k2t_search.py_func(masks, 6, -1, -1)[3] == k2t_search(masks, 6, -1, -1)[3]
    assert np.array_equal(canonical_masks.py_func(h.masks), canonical_masks(h.masks))


def test_in_process_values():
    assert count_k25_free(6).k25_free == 7
    assert search_k2t(g_k(2), 6).model is None
    assert hamilton_search(herschel())[0] is None
