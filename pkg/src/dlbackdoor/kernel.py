"""Kernel selection: compiled extension if built, pure Python otherwise.

Set DLBACKDOOR_PURE=1 to force the pure-Python kernel (used by the
benchmark and the backend-agreement tests).
"""

import os

if os.environ.get("DLBACKDOOR_PURE"):
    from dlbackdoor._kernel_py import solve_dpll

    BACKEND = "python"
else:
    try:
        from dlbackdoor._kernel import solve_dpll  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from dlbackdoor._kernel_py import solve_dpll  # type: ignore[no-redef]

        BACKEND = "python"

__all__ = ["solve_dpll", "BACKEND"]
