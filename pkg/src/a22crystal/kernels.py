"""Kernel selection.

The compiled extension is used when it was built; otherwise, or when the
environment variable ``A22_PURE_PYTHON`` is set to a non-empty value, the
pure-Python implementation is used.  ``BACKEND`` names the active one.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("A22_PURE_PYTHON"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

energy_h = _impl.energy_h
fold_stats = _impl.fold_stats
f_position = _impl.f_position
e_position = _impl.e_position
cancel_counts = _impl.cancel_counts

__all__ = ["BACKEND", "energy_h", "fold_stats", "f_position", "e_position", "cancel_counts"]
