"""Selects the compiled reduction kernel when available.

Set ``FUSIONRING_PURE_PYTHON=1`` to force the pure-Python implementation.
"""
import os

BACKEND = "python"

if os.environ.get("FUSIONRING_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from ._kernels import reflect_batch  # type: ignore[import-not-found]

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import reflect_batch
else:
    from ._kernels_py import reflect_batch

__all__ = ["reflect_batch", "BACKEND"]
