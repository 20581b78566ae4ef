"""Kernel backend selection.

The env flag MODGRAD_BACKEND picks "numba" (jit-compiled loops) or "numpy"
(pure vectorized fallback).  Unset, numba is used when importable.  The
benchmark and the parity tests flip backends at runtime via set_backend().
"""

from __future__ import annotations

import os
import warnings

from . import _kernels_numpy

_impls = {"numpy": _kernels_numpy}
_active = None

KERNEL_NAMES = (
    "scalar_mul",
    "scalar_inv",
    "mat_mul",
    "rref",
    "reduce_rows",
    "bilinear",
    "leibniz_witness",
)


def _load_numba_impl():
    if "numba" not in _impls:
        from . import _kernels_numba

        _impls["numba"] = _kernels_numba
    return _impls["numba"]


def numba_available() -> bool:
    try:
        _load_numba_impl()
        return True
    except ImportError:
        return False


def set_backend(name: str) -> str:
    global _active
    if name == "numba":
        _load_numba_impl()
    elif name != "numpy":
        raise ValueError(f"unknown backend {name!r}; expected 'numba' or 'numpy'")
    _active = name
    return _active


def backend_name() -> str:
    global _active
    if _active is None:
        requested = os.environ.get("MODGRAD_BACKEND", "").strip().lower()
        if requested in ("numpy", "numba"):
            if requested == "numba" and not numba_available():
                warnings.warn("MODGRAD_BACKEND=numba but numba is not importable; "
                              "falling back to numpy")
                _active = "numpy"
            else:
                set_backend(requested)
        elif requested:
            raise ValueError(f"MODGRAD_BACKEND={requested!r} not recognized")
        else:
            _active = "numba" if numba_available() else "numpy"
    return _active


def _impl():
    return _impls[backend_name()]


def scalar_mul(a, b, red2, p):
    return _impl().scalar_mul(a, b, red2, p)


def scalar_inv(a, red2, p, order):
    return _impl().scalar_inv(a, red2, p, order)


def mat_mul(A, B, red2, p):
    return _impl().mat_mul(A, B, red2, p)


def rref(M, red2, p, order):
    return _impl().rref(M, red2, p, order)


def reduce_rows(R, pivots, rows, red2, p):
    return _impl().reduce_rows(R, pivots, rows, red2, p)


def bilinear(U, V, I, J, K, C, red2, p, nout):
    return _impl().bilinear(U, V, I, J, K, C, red2, p, nout)


def leibniz_witness(D, I, J, K, C, red2, p):
    return _impl().leibniz_witness(D, I, J, K, C, red2, p)
