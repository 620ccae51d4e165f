"""JIT switch.

Kernels are compiled with numba unless ``RICCI4_DISABLE_JIT`` is set to a
truthy value (or numba is not importable), in which case the pure-numpy
fallbacks are bound instead.  The flag is read once, at import time.
"""
import os

_FALSE = ("", "0", "false", "no", "off")

JIT_REQUESTED = os.environ.get("RICCI4_DISABLE_JIT", "").strip().lower() in _FALSE

try:
    import numba as _nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    _nb = None

USE_JIT = JIT_REQUESTED and _nb is not None


def njit(fn):
    """Compile ``fn`` in nopython mode when JIT is active, else return it."""
    if not USE_JIT:
        return fn
    return _nb.njit(cache=True, nogil=True)(fn)


def force_njit(fn):
    """Always compile (used by the benchmark to time both paths in-process)."""
    if _nb is None:
        raise RuntimeError("numba is not available")
    return _nb.njit(cache=True, nogil=True)(fn)
