"""Search-kernel selection.

The compiled ``_fast`` extension is used when it imports and the instance
fits its limits (n <= 64, fewer than 64 distinct colors); otherwise the
pure-Python ``_pure`` module is used.  Set ``PROPERINDEX_KERNEL=python`` to
force the fallback everywhere.
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _fast
except ImportError:  # extension not built (e.g. plain source checkout)
    _fast = None

_FORCE = os.environ.get("PROPERINDEX_KERNEL", "").lower()


def available_backends() -> list[str]:
    return ["python"] + (["cython"] if _fast is not None else [])


def default_backend() -> str:
    if _FORCE == "python" or _fast is None:
        return "python"
    return "cython"


def kernel_graph(n: int, edges, backend: str | None = None, max_colors: int = 0):
    """Build a kernel graph for ``backend`` (default: best available)."""
    backend = backend or default_backend()
    if backend == "cython":
        if _fast is None:
            raise RuntimeError("compiled kernels are not available")
        if n <= _fast.MAX_N and max_colors <= _fast.MAX_COLORS:
            return _fast.KernelGraph(n, edges)
        backend = "python"
    if backend != "python":
        raise ValueError(f"unknown kernel backend {backend!r}")
    return _pure.KernelGraph(n, edges)


def ham_path_limit(backend: str | None = None) -> int:
    backend = backend or default_backend()
    return _fast.MAX_HAM_N if backend == "cython" and _fast is not None else 22
