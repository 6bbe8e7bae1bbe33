"""Select the tau kernel backend at import time.

The compiled extension is used when it is importable; ``HFPLUS_PURE_PYTHON=1``
forces the pure-Python fallback.
"""

from __future__ import annotations

import os

from . import _tau_py

INT64_LIMIT = 2**62

python_backend = _tau_py
compiled_backend = None

if os.environ.get("HFPLUS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _tau_ext as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

backend = compiled_backend or python_backend
BACKEND = backend.BACKEND


def fits_int64(e0: int, a, b, bound: int) -> bool:
    """Whether every intermediate of the compiled kernel stays below 2**62."""
    big = max([abs(e0), 1, *a, *b])
    m = len(a)
    # |j*e0|, |j*b_i| <= bound*big and |tau| <= bound*(1 + bound*big*(m + 1))
    return bound * (1 + bound * big * (m + 1)) < INT64_LIMIT


def tau_values(e0: int, a, b, bound: int) -> list[int]:
    if backend is not python_backend and fits_int64(e0, a, b, bound):
        return backend.tau_values(e0, a, b, bound)
    return python_backend.tau_values(e0, a, b, bound)


def extrema(values) -> tuple[list[int], list[int], list[int]]:
    if backend is not python_backend and values and -INT64_LIMIT < min(values) and max(values) < INT64_LIMIT:
        return backend.extrema(values)
    return python_backend.extrema(values)
