"""Numba switch.

Set ``QSITRANSFER_DISABLE_NUMBA=1`` (or numba's own ``NUMBA_DISABLE_JIT=1``)
to run the pure-numpy kernels instead of the compiled ones. The flag is read
once at import time.
"""
import os

_FLAG_VALUES = {"1", "true", "yes", "on"}


def _flag(name):
    return os.environ.get(name, "").strip().lower() in _FLAG_VALUES


try:
    import numba
except ImportError:  # pragma: no cover - numba is a hard dependency in CI
    numba = None

HAS_NUMBA = numba is not None
USE_NUMBA = HAS_NUMBA and not (
    _flag("QSITRANSFER_DISABLE_NUMBA") or _flag("NUMBA_DISABLE_JIT")
)


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise the identity decorator."""
    if not HAS_NUMBA:
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn
    return numba.njit(*args, **kwargs)
