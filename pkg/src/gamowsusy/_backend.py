"""Kernel backend selection.

The numeric kernels (hypergeometric series, ODE stepping) are compiled with
numba when it is importable and not explicitly disabled.  Setting the
environment variable ``GAMOWSUSY_DISABLE_NUMBA=1`` before import selects the
pure-Python fallback, which runs the identical source unjitted.  The choice is
made once at import time; ``benchmarks/bench_backends.py`` times both paths.
"""

from __future__ import annotations

import os


def _probe() -> bool:
    if os.environ.get("GAMOWSUSY_DISABLE_NUMBA", "0") == "1":
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _probe()

if NUMBA_ENABLED:
    from numba import njit as _numba_njit

    def njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        return _numba_njit(*args, **kwargs)

else:

    def njit(*args, **kwargs):
        # identity decorator, tolerant of both @njit and @njit(...) forms
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


def backend_name() -> str:
    return "numba" if NUMBA_ENABLED else "python"
