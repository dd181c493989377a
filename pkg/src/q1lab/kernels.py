"""Backend selection for the hot kernels.

The compiled extension is used when importable; ``Q1LAB_PURE_PYTHON=1``
forces the NumPy fallback.
"""
import os

from q1lab import _pykernels

if os.environ.get("Q1LAB_PURE_PYTHON"):
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from q1lab import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # no compiler at install time
        _impl = _pykernels
        BACKEND = "python"

jacobi_eigh = _impl.jacobi_eigh
max_clique = _impl.max_clique
connected_masks = _impl.connected_masks
scan_connected = _impl.scan_connected

__all__ = ["BACKEND", "jacobi_eigh", "max_clique", "connected_masks", "scan_connected"]
