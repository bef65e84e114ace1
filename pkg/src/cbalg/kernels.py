"""Backend dispatch for the finite-field brute-force scans.

The enumeration scans (bonding violations, centralizer-ideal checks,
CB-element masks) dominate the runtime of every oracle, so they run on
int64 tensors mod p.  Two interchangeable backends exist:

* ``numba`` - @njit compiled loops, the default when numba imports;
* ``numpy`` - vectorized fallback, forced with CBALG_PURE_NUMPY=1.

`benchmarks/bench_kernels.py` compares the two; the test suite asserts
they return identical indices.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from . import _scan_numpy
from .errors import InfiniteField
from .fields import PrimeField

__all__ = [
    "backend",
    "backend_name",
    "available_backends",
    "vectors_mod_p",
    "mod_tensor",
    "warmup",
    "cb_scan",
    "cl_scan",
    "cb_element_check",
    "cb_element_mask",
]

_numba_backend = None
_numba_error = None


def _load_numba_backend():
    global _numba_backend, _numba_error
    if _numba_backend is None and _numba_error is None:
        try:
            from . import _scan_numba

            _numba_backend = _scan_numba
        except ImportError as exc:  # pragma: no cover - environment dependent
            _numba_error = exc
    return _numba_backend


def _pick_default():
    if os.environ.get("CBALG_PURE_NUMPY", "").strip() not in ("", "0"):
        return _scan_numpy
    return _load_numba_backend() or _scan_numpy


_default = _pick_default()


def backend(name: str | None = None):
    """The active backend module, or a specific one by name."""
    if name is None:
        return _default
    if name == "numpy":
        return _scan_numpy
    if name == "numba":
        nb = _load_numba_backend()
        if nb is None:
            raise ImportError(f"numba backend unavailable: {_numba_error}")
        return nb
    raise ValueError(f"unknown backend {name!r}")


def backend_name() -> str:
    return _default.NAME


def available_backends() -> tuple:
    names = ["numpy"]
    if _load_numba_backend() is not None:
        names.insert(0, "numba")
    return tuple(names)


def vectors_mod_p(p: int, n: int) -> np.ndarray:
    """All p^n vectors in the same lexicographic order as enumerate_vectors."""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(itertools.product(range(p), repeat=n)), dtype=np.int64)


def mod_tensor(A) -> np.ndarray:
    """The structure tensor of a prime-field algebra as an int64 array."""
    if not isinstance(A.field, PrimeField):
        raise InfiniteField("brute-force scans need a finite field")
    n = A.dim
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            vec = A.table[i][j]
            for k in range(n):
                c[i, j, k] = vec[k] % A.field.p
    return c


def cb_scan(c, p, V, impl=None):
    return (impl or _default).cb_scan(c, p, V)


def cl_scan(c, p, V, impl=None):
    return (impl or _default).cl_scan(c, p, V)


def cb_element_check(c, p, V, z, impl=None):
    return (impl or _default).cb_element_check(c, p, V, z)


def cb_element_mask(c, p, V, impl=None):
    return (impl or _default).cb_element_mask(c, p, V)


def warmup():
    """Trigger jit compilation on a tiny instance so timed runs stay honest."""
    c = np.zeros((2, 2, 2), dtype=np.int64)
    c[0, 1, 1] = 1
    c[1, 0, 1] = 2  # -1 mod 3
    V = vectors_mod_p(3, 2)
    _default.cb_scan(c, 3, V)
    _default.cl_scan(c, 3, V)
    _default.cb_element_mask(c, 3, V)
    _default.cb_element_check(c, 3, V, V[1])
