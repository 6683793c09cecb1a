"""Kernel backend selection.

Prefers the compiled extension (coclass._kernels._fast, built with Cython)
and falls back to the pure-Python/numpy implementation.  Set the environment
variable COCLASS_PURE=1 to force the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("COCLASS_PURE"):
    from . import pure as _impl
else:
    try:
        from . import _fast as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import pure as _impl

BACKEND: str = _impl.BACKEND
perm_centralizer = _impl.perm_centralizer
conic_search = _impl.conic_search

__all__ = ["BACKEND", "perm_centralizer", "conic_search"]
