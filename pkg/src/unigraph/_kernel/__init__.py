"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set UNIGRAPH_PURE=1 to force the pure implementation regardless of what was
built; `unigraph._kernel.IMPL` reports which one is active.
"""

import os

if os.environ.get("UNIGRAPH_PURE"):
    from . import _pykernel as _impl
else:
    try:
        from . import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernel as _impl

IMPL = _impl.IMPL_NAME

normalize_runs = _impl.normalize_runs
eg_graphical = _impl.eg_graphical
split_point = _impl.split_point
decompose_runs = _impl.decompose_runs
