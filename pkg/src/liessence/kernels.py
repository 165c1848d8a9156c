"""Backend selection for the integer kernels.

The compiled extension is used when it imports; otherwise, or when
``LIESSENCE_PURE_PYTHON=1`` is set, the pure-Python versions are used.
"""

from __future__ import annotations

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("LIESSENCE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels
    else:
        BACKEND = "cython"
else:
    _impl = _pykernels

rref_int = _impl.rref_int
charpoly_int = _impl.charpoly_int
matmul_int = _impl.matmul_int

__all__ = ["BACKEND", "rref_int", "charpoly_int", "matmul_int"]
