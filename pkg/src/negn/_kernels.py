"""Kernel selection: the compiled extension when it was built, else pure Python.

Set ``NEGN_PURE_PYTHON=1`` to force the fallback.
"""
import os

BACKEND = "python"

if not os.environ.get("NEGN_PURE_PYTHON"):
    try:
        from ._ckernels import hook_content_dim, interp_consecutive, weyl_dim  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._kernels_py import hook_content_dim, interp_consecutive, weyl_dim  # noqa: F401
