"""Backend switch for the counting kernels.

Kernels are compiled with numba when it is importable, unless the
environment variable ``DENSITYLAB_DISABLE_NUMBA`` is set to a truthy value,
in which case the pure-numpy implementations are used.
"""
from __future__ import annotations

import os

DISABLE_ENV = "DENSITYLAB_DISABLE_NUMBA"

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    numba = None
    HAVE_NUMBA = False


def _flag_set() -> bool:
    return os.environ.get(DISABLE_ENV, "").strip().lower() in {"1", "true", "yes", "on"}


USE_NUMBA = HAVE_NUMBA and not _flag_set()


def njit(func):
    """``numba.njit(cache=True)`` if numba is present, identity otherwise."""
    if HAVE_NUMBA:
        return numba.njit(cache=True)(func)
    return func


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"


def set_threads(threads: int | None) -> None:
    if threads and HAVE_NUMBA:
        numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
