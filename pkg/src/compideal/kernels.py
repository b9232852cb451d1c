"""Backend selection for the lattice kernels.

The compiled module is used when it imports and the
``COMPIDEAL_PURE_PYTHON`` environment variable is unset.  Inputs whose
dot products could overflow 64-bit integers are always routed to the
Python backend.
"""

import os

from . import _pykernels

try:
    if os.environ.get("COMPIDEAL_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"

_LIMIT = 1 << 62


def _fits(rows, bounds):
    span = sum(bounds) + 1
    return all(abs(x) * span < _LIMIT for row in rows for x in row)


def _pick(backend):
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels
    if backend == "python":
        return _pykernels
    raise ValueError(f"unknown backend {backend!r}")


def staircase_count(gens, bounds, backend=None):
    mod = _pick(backend)
    if mod is _ckernels and not _fits(list(gens) + [bounds], bounds):
        mod = _pykernels
    return mod.staircase_count(list(gens), tuple(bounds))


def np_count_outside(normals, rhs, bounds, backend=None):
    mod = _pick(backend)
    if mod is _ckernels and not _fits(list(normals) + [list(rhs)], bounds):
        mod = _pykernels
    return mod.np_count_outside(list(normals), list(rhs), tuple(bounds))


def np_minimal_points(normals, rhs, bounds, backend=None):
    mod = _pick(backend)
    if mod is _ckernels and not _fits(list(normals) + [list(rhs)], bounds):
        mod = _pykernels
    return mod.np_minimal_points(list(normals), list(rhs), tuple(bounds))
