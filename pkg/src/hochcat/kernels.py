"""Kernel selection: compiled GF(p) elimination when available.

Set ``HOCHCAT_PURE=1`` to force the pure-Python kernel (used by the
benchmark and by tests exercising the fallback path).  Both kernels are
bit-identical in output, so the choice never affects results.
"""

from __future__ import annotations

import os

from . import _gfcore_py

if os.environ.get("HOCHCAT_PURE") == "1":
    _impl = _gfcore_py
else:
    try:
        from . import _gfcore as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _gfcore_py

BACKEND: str = _impl.BACKEND
rref_mod_p = _impl.rref_mod_p
