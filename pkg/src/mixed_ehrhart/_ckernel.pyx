# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-point counting kernel.

Contract matches ``_pykernel.count_box``.  Callers guarantee that every
intermediate ``A y - b`` fits in 64 bits (see ``enumeration._fits_int64``).
"""

import numpy as np

from libc.stdlib cimport malloc, free

ctypedef long long i64


cdef inline i64 floordiv(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a < 0):
        q -= 1
    return q


cdef inline i64 ceildiv(i64 a, i64 b) nogil:
    # b > 0
    cdef i64 q = a / b
    if (a % b != 0) and (a > 0):
        q += 1
    return q


cdef void row_interval(const i64[:, ::1] A, const i64[::1] b, i64* partial,
                       int nf, int last, i64 lo, i64 hi, i64 slack,
                       i64* out_lo, i64* out_hi) noexcept nogil:
    cdef i64 low = lo, high = hi, rhs, c, q
    cdef int f
    for f in range(nf):
        rhs = b[f] - slack - partial[f]
        c = A[f, last]
        if c > 0:
            q = floordiv(rhs, c)
            if q < high:
                high = q
        elif c < 0:
            q = ceildiv(-rhs, -c)
            if q > low:
                low = q
        elif rhs < 0:
            out_lo[0] = 1
            out_hi[0] = 0
            return
    out_lo[0] = low
    out_hi[0] = high


def count_box(A_in, b_in, lo_in, hi_in):
    """Return ``(total, interior)`` integer-point counts of ``A y <= b`` in a box."""
    cdef const i64[:, ::1] A = np.ascontiguousarray(A_in, dtype=np.int64).reshape(len(b_in), len(lo_in))
    cdef const i64[::1] b = np.ascontiguousarray(b_in, dtype=np.int64)
    cdef const i64[::1] lo = np.ascontiguousarray(lo_in, dtype=np.int64)
    cdef const i64[::1] hi = np.ascontiguousarray(hi_in, dtype=np.int64)
    cdef int m = lo.shape[0]
    cdef int nf = b.shape[0]
    cdef int last, j, f
    cdef i64 total = 0, interior = 0, l, h
    cdef i64* y
    cdef i64* partial
    if m == 0:
        return 1, 1
    for j in range(m):
        if lo[j] > hi[j]:
            return 0, 0
    last = m - 1
    y = <i64*> malloc(m * sizeof(i64))
    partial = <i64*> malloc((nf + 1) * sizeof(i64))
    if y == NULL or partial == NULL:
        free(y)
        free(partial)
        raise MemoryError()
    try:
        with nogil:
            for j in range(m):
                y[j] = lo[j]
            while True:
                for f in range(nf):
                    partial[f] = 0
                    for j in range(last):
                        partial[f] += A[f, j] * y[j]
                row_interval(A, b, partial, nf, last, lo[last], hi[last], 0, &l, &h)
                if h >= l:
                    total += h - l + 1
                    row_interval(A, b, partial, nf, last, lo[last], hi[last], 1, &l, &h)
                    if h >= l:
                        interior += h - l + 1
                j = last - 1
                while j >= 0:
                    y[j] += 1
                    if y[j] <= hi[j]:
                        break
                    y[j] = lo[j]
                    j -= 1
                if j < 0:
                    break
    finally:
        free(y)
        free(partial)
    return int(total), int(interior)
