"""Kernel compilation switch.

Hot loops are written once in the numba-compatible subset of Python and
decorated with :func:`kernel`.  Setting ``MINORHAM_DISABLE_NUMBA=1`` (or
running without numba installed) leaves them as plain Python functions over
numpy arrays.  Compiled kernels keep the original function on ``.py_func``.
"""

from __future__ import annotations

import os

_DISABLED = os.environ.get("MINORHAM_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes"}

try:
    if _DISABLED:
        raise ImportError
    from numba import njit as _njit
    NUMBA_ENABLED = True
except ImportError:  # pragma: no cover - exercised via env flag in benchmarks
    _njit = None
    NUMBA_ENABLED = False


def kernel(fn):
    if NUMBA_ENABLED:
        return _njit(cache=True, nogil=True)(fn)
    fn.py_func = fn
    return fn


@kernel
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@kernel
def lowbit_index(x):
    i = 0
    while (x & 1) == 0:
        x >>= 1
        i += 1
    return i
