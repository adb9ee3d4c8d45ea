"""Kernel backend selection.

The compiled Cython kernels are preferred when importable; the numpy
fallback implements the same algorithms.  Set CAVITYDRESS_KERNELS to
``compiled`` or ``python`` to force one (``compiled`` raises if the
extension is missing instead of silently degrading)."""

from __future__ import annotations

import os

_requested = os.environ.get("CAVITYDRESS_KERNELS", "auto").strip().lower()

if _requested not in ("auto", "compiled", "python"):
    raise ImportError(
        f"CAVITYDRESS_KERNELS must be auto, compiled or python, got {_requested!r}"
    )

if _requested == "python":
    from . import _kernels_py as kernels
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]
    except ImportError:
        if _requested == "compiled":
            raise
        from . import _kernels_py as kernels  # type: ignore[no-redef]

BACKEND = kernels.BACKEND_NAME


def load_backend(name: str):
    """Explicitly load one kernel backend, bypassing the import-time choice."""
    if name == "python":
        from . import _kernels_py

        return _kernels_py
    if name == "compiled":
        from . import _kernels  # raises ImportError when not built

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
