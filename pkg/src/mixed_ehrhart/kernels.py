"""Counting-kernel selection.

The compiled kernel is used when the extension imported and the system's
magnitudes fit in signed 64-bit arithmetic; otherwise the pure-Python kernel
runs on arbitrary-precision integers.  Set ``MIXED_EHRHART_PURE=1`` to force
the Python kernel.
"""

from __future__ import annotations

import os

from . import _pykernel


try:
    from . import _ckernel
except ImportError:  # extension not built
    _ckernel = None

_LIMIT = 1 << 62


def backend() -> str:
    if _ckernel is not None and os.environ.get("MIXED_EHRHART_PURE") != "1":
        return "compiled"
    return "python"


def fits_int64(A, b, lo, hi) -> bool:
    reach = [max(abs(l), abs(h)) for l, h in zip(lo, hi)]
    for row, rhs in zip(A, b):
        if sum(abs(a) * r for a, r in zip(row, reach)) + abs(rhs) + 2 >= _LIMIT:
            return False
    return True


def count_box(A, b, lo, hi) -> tuple[int, int]:
    if backend() == "compiled" and fits_int64(A, b, lo, hi):
        return _ckernel.count_box(A, b, lo, hi)
    return _pykernel.count_box(A, b, lo, hi)


def python_count_box(A, b, lo, hi) -> tuple[int, int]:
    return _pykernel.count_box(A, b, lo, hi)


def compiled_count_box(A, b, lo, hi) -> tuple[int, int]:
    if _ckernel is None:
        raise RuntimeError("compiled kernel is not available")
    return _ckernel.count_box(A, b, lo, hi)


enumerate_box = _pykernel.enumerate_box
