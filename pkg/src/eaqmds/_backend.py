"""Select the kernel backend.

Numba is used when importable unless ``EAQMDS_NUMBA`` is set to ``0``,
``false`` or ``off``; the pure-numpy kernels are used otherwise.
"""

from __future__ import annotations

import os
import warnings

_FLAG = os.environ.get("EAQMDS_NUMBA", "1").strip().lower()
_REQUESTED = _FLAG not in {"0", "false", "off", "no"}

try:
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False
    _njit = None
    if _REQUESTED:
        warnings.warn("numba could not be imported, falling back to numpy kernels")

USE_NUMBA = HAVE_NUMBA and _REQUESTED


def njit(func):
    """``numba.njit(cache=True)`` when numba is present, identity otherwise."""
    if not HAVE_NUMBA:
        return func
    return _njit(cache=True, nogil=True)(func)


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
