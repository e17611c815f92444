"""Backend selection for the sweep kernels.

The compiled extension is used when it imports; setting the environment
variable ``SUMRANK_PURE_PYTHON=1`` forces the pure-Python fallback.
"""

from __future__ import annotations

import os

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

if _compiled is not None and not os.environ.get("SUMRANK_PURE_PYTHON"):
    backend = _compiled
    BACKEND = "cython"
else:
    backend = _kernels_py
    BACKEND = "python"


def available() -> dict:
    out = {"python": _kernels_py}
    if _compiled is not None:
        out["cython"] = _compiled
    return out


def get(name: str | None = None):
    if name is None:
        return backend
    return available()[name]


def kernel_tables(F) -> tuple:
    """Arrays describing ``F`` in the layout the kernels expect."""
    tabs = getattr(F, "_kernel_tabs", None)
    if tabs is None:
        c = np.ascontiguousarray
        tabs = (
            F.p,
            F.e,
            F.m,
            c(F.exp_np, dtype=np.int64),
            c(F.log_np, dtype=np.int64),
            c(F.zech_np, dtype=np.int64),
            c(F.coords_np.reshape(-1), dtype=np.int64),
            np.array(F.basis, dtype=np.int64),
        )
        F._kernel_tabs = tabs
    return tabs
