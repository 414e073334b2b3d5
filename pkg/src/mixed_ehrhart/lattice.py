"""Integer linear algebra: unimodular column reduction, Hermite forms and
integer kernels.

Matrices are plain lists of integer rows.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Vector = tuple[int, ...]
Matrix = list[list[int]]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def primitive(v: Sequence[int]) -> Vector:
    g = math.gcd(*v) if len(v) else 0
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_normalized(v: Sequence[int]) -> Vector:
    """Primitive representative with first nonzero entry positive."""
    v = primitive(v)
    for x in v:
        if x:
            return v if x > 0 else tuple(-y for y in v)
    return v


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def column_reduce(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Matrix, Matrix, int]:
    """Unimodular column reduction.

    Returns ``(H, U, r)`` with ``rows @ U == H``, ``U`` unimodular and ``H``
    in column echelon form with ``r`` nonzero columns (``r`` = rank).  The
    last ``ncols - r`` columns of ``U`` form a basis of the integer kernel.
    """
    M = [list(map(int, row)) for row in rows]
    U = identity(ncols)
    r = 0
    for i in range(len(M)):
        if r == ncols:
            break
        row = M[i]
        for j in range(r + 1, ncols):
            if row[j] == 0:
                continue
            a, b = row[r], row[j]
            g, x, y = xgcd(a, b)
            p, q = a // g, b // g
            # [col_r, col_j] <- [x*col_r + y*col_j, -q*col_r + p*col_j], det = 1
            for mat in (M, U):
                for line in mat:
                    cr, cj = line[r], line[j]
                    line[r] = x * cr + y * cj
                    line[j] = -q * cr + p * cj
        if row[r] != 0:
            if row[r] < 0:
                for mat in (M, U):
                    for line in mat:
                        line[r] = -line[r]
            r += 1
    return M, U, r


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of ``{x in Z^ncols : rows @ x == 0}`` in Hermite normal form."""
    _, U, r = column_reduce(rows, ncols)
    basis = [tuple(U[i][j] for i in range(ncols)) for j in range(r, ncols)]
    return hermite_rows(basis)


def hermite_rows(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    """Row Hermite normal form of the lattice spanned by ``vectors``.

    Zero rows are dropped; pivots are positive and entries above a pivot are
    reduced into ``[0, pivot)``.
    """
    if not vectors:
        return []
    n = len(vectors[0])
    A = [list(map(int, v)) for v in vectors]
    pivot_row = 0
    pivots: list[int] = []
    for col in range(n):
        # gcd-combine all rows below pivot_row into a single pivot
        for i in range(pivot_row + 1, len(A)):
            if A[i][col] == 0:
                continue
            a, b = A[pivot_row][col], A[i][col]
            g, x, y = xgcd(a, b)
            p, q = a // g, b // g
            top, other = A[pivot_row], A[i]
            A[pivot_row] = [x * s + y * t for s, t in zip(top, other)]
            A[i] = [-q * s + p * t for s, t in zip(top, other)]
        if pivot_row < len(A) and A[pivot_row][col] != 0:
            if A[pivot_row][col] < 0:
                A[pivot_row] = [-x for x in A[pivot_row]]
            piv = A[pivot_row][col]
            for i in range(pivot_row):
                f = A[i][col] // piv
                if f:
                    A[i] = [s - f * t for s, t in zip(A[i], A[pivot_row])]
            pivots.append(col)
            pivot_row += 1
            if pivot_row == len(A):
                break
    return [tuple(row) for row in A[:pivot_row]]


def rank(rows: Sequence[Sequence[int]]) -> int:
    if not rows:
        return 0
    return column_reduce(rows, len(rows[0]))[2]


def inverse_unimodular(U: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(U)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(U)]
    for col in range(n):
        piv = next(i for i in range(col, n) if A[i][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    out = []
    for row in A:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append([int(v) for v in vals])
    return out


class SublatticeFrame:
    """Coordinates on the saturated lattice ``V ∩ Z^d`` of a rational subspace.

    ``V`` is given as the common kernel of ``constraints`` (integer rows).
    ``basis`` holds ``m = dim V`` integer column vectors; ``coordinates``
    maps a lattice point of ``V`` to its integer coordinates in that basis,
    and ``lift`` goes back.  The map is a bijection ``V ∩ Z^d <-> Z^m``.
    """

    def __init__(self, constraints: Sequence[Sequence[int]], d: int):
        self.d = d
        _, U, r = column_reduce(constraints, d) if constraints else (None, identity(d), 0)
        self.m = d - r
        self.basis: list[Vector] = [tuple(U[i][j] for i in range(d)) for j in range(r, d)]
        self._proj = inverse_unimodular(U)[r:]

    def coordinates(self, x: Sequence[int]) -> Vector:
        return tuple(dot(row, x) for row in self._proj)

    def lift(self, y: Sequence[int]) -> Vector:
        return tuple(sum(b[i] * yi for b, yi in zip(self.basis, y)) for i in range(self.d))

    def pull_back_functional(self, a: Sequence[int]) -> Vector:
        """Functional on ``Z^m`` equal to ``a`` composed with :meth:`lift`."""
        return tuple(dot(a, b) for b in self.basis)
