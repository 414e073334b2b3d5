"""Pure-Python lattice-point counting kernel.

Same contract as the compiled ``_ckernel`` module: count integer points of
``{y : A y <= b}`` inside the box ``lo <= y <= hi``, walking the box over all
but the last coordinate and solving the last coordinate's interval exactly.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def _row_interval(A, b, last, partial, lo, hi, slack):
    low, high = lo, hi
    for f in range(len(b)):
        rhs = b[f] - slack - partial[f]
        c = A[f][last]
        if c > 0:
            q = rhs // c
            if q < high:
                high = q
        elif c < 0:
            q = -(rhs // -c)  # ceil(rhs / c)
            if q > low:
                low = q
        elif rhs < 0:
            return 1, 0
    return low, high


def _rows(A: Sequence[Sequence[int]], lo: Sequence[int], hi: Sequence[int]) -> Iterator[tuple[list[int], tuple[int, ...]]]:
    """Yield ``(A[:, :-1] @ prefix, prefix)`` for every row of the box."""
    m = len(lo)
    nf = len(A)
    if m == 1:
        yield [0] * nf, ()
        return
    y = list(lo[:-1])
    while True:
        yield [sum(A[f][j] * y[j] for j in range(m - 1)) for f in range(nf)], tuple(y)
        j = m - 2
        while j >= 0:
            y[j] += 1
            if y[j] <= hi[j]:
                break
            y[j] = lo[j]
            j -= 1
        if j < 0:
            return


def count_box(A, b, lo, hi) -> tuple[int, int]:
    """Return ``(total, interior)``; interior uses ``A y <= b - 1``."""
    m = len(lo)
    if m == 0:
        return 1, 1
    if any(l > h for l, h in zip(lo, hi)):
        return 0, 0
    last = m - 1
    total = interior = 0
    for partial, _ in _rows(A, lo, hi):
        l, h = _row_interval(A, b, last, partial, lo[last], hi[last], 0)
        if h >= l:
            total += h - l + 1
            l, h = _row_interval(A, b, last, partial, lo[last], hi[last], 1)
            if h >= l:
                interior += h - l + 1
    return total, interior


def enumerate_box(A, b, lo, hi) -> list[tuple[int, ...]]:
    """All points of the system, lexicographic in the given coordinates."""
    m = len(lo)
    if m == 0:
        return [()]
    last = m - 1
    out = []
    for partial, prefix in _rows(A, lo, hi):
        l, h = _row_interval(A, b, last, partial, lo[last], hi[last], 0)
        for t in range(l, h + 1):
            out.append(prefix + (t,))
    return out
