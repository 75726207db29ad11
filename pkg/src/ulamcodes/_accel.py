"""Kernel selection.

The compiled extension is used when it imports cleanly; otherwise, or when
the environment variable ``ULAM_PURE_PYTHON`` is set to a non-empty value
other than ``0``, the pure-Python twins are used.
"""
import os

from . import _pykernels

_force_pure = os.environ.get("ULAM_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    _impl = _pykernels
    COMPILED = False
else:
    try:
        from . import _kernels as _impl
        COMPILED = True
    except ImportError:  # extension not built
        _impl = _pykernels
        COMPILED = False

BACKEND = "cython" if COMPILED else "python"

lcs_length = _impl.lcs_length
far_from_all = _impl.far_from_all
nearest = _impl.nearest
min_pairwise_distance = _impl.min_pairwise_distance
