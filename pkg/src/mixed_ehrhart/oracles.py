"""Brute-force reference computations.

These share no code with the facet-based machinery: membership is decided
by covering the polytope with simplices spanned by generators, and counting
by testing every point of the bounding box.  They are slow and only meant
for small instances.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Sequence

Point = tuple[int, ...]


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact solve of a full-column-rank system; ``None`` if inconsistent."""
    n = len(rows[0]) if rows else 0
    A = [r[:] + [b] for r, b in zip(rows, rhs)]
    row = 0
    for col in range(n):
        p = next((i for i in range(row, len(A)) if A[i][col] != 0), None)
        if p is None:
            return None
        A[row], A[p] = A[p], A[row]
        pv = A[row][col]
        A[row] = [x / pv for x in A[row]]
        for i in range(len(A)):
            if i != row and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[row])]
        row += 1
    if any(A[i][n] != 0 for i in range(row, len(A))):
        return None
    return [A[i][n] for i in range(n)]


def _affinely_independent_subsets(points: Sequence[Point]) -> list[tuple[Point, ...]]:
    """All affinely independent subsets of maximal size (``dim + 1``)."""
    pts = list(points)
    d = len(pts[0])
    for size in range(min(len(pts), d + 1), 0, -1):
        found = []
        for combo in itertools.combinations(pts, size):
            base = combo[0]
            vecs = [[Fraction(a - b) for a, b in zip(p, base)] for p in combo[1:]]
            if _rank(vecs) == size - 1:
                found.append(combo)
        if found:
            return found
    return []


def _rank(vecs: list[list[Fraction]]) -> int:
    M = [v[:] for v in vecs]
    r = 0
    ncols = len(M[0]) if M else 0
    for col in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][col] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, len(M)):
            if M[i][col] != 0:
                f = M[i][col] / M[r][col]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
    return r


def barycentric(simplex: Sequence[Point], z: Point) -> list[Fraction] | None:
    """Affine coordinates of ``z`` w.r.t. an affinely independent simplex."""
    d = len(z)
    rows = [[Fraction(v[i]) for v in simplex] for i in range(d)]
    rows.append([Fraction(1)] * len(simplex))
    rhs = [Fraction(x) for x in z] + [Fraction(1)]
    return _solve(rows, rhs)


def simplex_cover_location(generators: Sequence[Point], z: Point) -> str:
    """``"interior"``, ``"boundary"`` or ``"outside"`` relative to ``conv(generators)``.

    ``z`` is in the hull iff it lies in some maximal simplex spanned by
    generators (Carathéodory within the affine hull).  A hull point is in the
    relative interior iff stepping slightly away from every generator stays
    in the hull.
    """
    gens = sorted(set(map(tuple, generators)))
    z = tuple(z)
    simplices = _affinely_independent_subsets(gens)
    if len(gens) == 1:
        return "interior" if z == gens[0] else "outside"
    inside = any(
        (lam := barycentric(s, z)) is not None and all(x >= 0 for x in lam) for s in simplices
    )
    if not inside:
        return "outside"
    # step 1/N beyond z, away from g; integer facet data keeps the slack of a
    # relatively interior lattice point >= 1, so a tiny step suffices
    N = 1 << 20
    for g in gens:
        w = tuple(Fraction((N + 1) * a - b, N) for a, b in zip(z, g))
        if not any(_in_simplex(s, w) for s in simplices):
            return "boundary"
    return "interior"


def _in_simplex(simplex: Sequence[Point], w: Sequence[Fraction]) -> bool:
    d = len(w)
    rows = [[Fraction(v[i]) for v in simplex] for i in range(d)]
    rows.append([Fraction(1)] * len(simplex))
    lam = _solve(rows, list(w) + [Fraction(1)])
    return lam is not None and all(x >= 0 for x in lam)


def bounding_box(generators: Sequence[Point]) -> list[Point]:
    d = len(generators[0])
    lo = [min(g[i] for g in generators) for i in range(d)]
    hi = [max(g[i] for g in generators) for i in range(d)]
    return list(itertools.product(*(range(l, h + 1) for l, h in zip(lo, hi))))


def brute_force_count(generators: Sequence[Point]) -> tuple[int, int]:
    total = interior = 0
    for z in bounding_box(generators):
        loc = simplex_cover_location(generators, z)
        if loc != "outside":
            total += 1
            if loc == "interior":
                interior += 1
    return total, interior


def dilate_points(points: Sequence[Point], r: int) -> list[Point]:
    return [tuple(r * x for x in p) for p in points]


def minkowski_points(a: Sequence[Point], b: Sequence[Point]) -> list[Point]:
    return sorted({tuple(x + y for x, y in zip(p, q)) for p in a for q in b})


def brute_force_dmv(collection: Sequence[Sequence[Point]]) -> int:
    """Inclusion-exclusion with brute-force counts."""
    k = len(collection)
    d = len(collection[0][0])
    total = 0
    for r in range(k + 1):
        for J in itertools.combinations(range(k), r):
            pts = [(0,) * d]
            for j in J:
                pts = minkowski_points(pts, collection[j])
            total += (-1) ** (k - r) * brute_force_count(pts)[0]
    return total


def hstar_by_series(values: Sequence[int], d: int) -> list[int]:
    """h*-coefficients from ``(1 - z)^(d+1) * sum_n E(n) z^n``, truncated.

    ``values`` must hold ``E(0), ..., E(d)``.
    """
    out = []
    for i in range(d + 1):
        acc = 0
        for j in range(i + 1):
            acc += (-1) ** j * _comb(d + 1, j) * values[i - j]
        out.append(acc)
    return out


def _comb(n: int, r: int) -> int:
    return math.comb(n, r) if 0 <= r <= n else 0


def eulerian_by_series(d: int) -> list[int]:
    """Coefficients of ``(1 - z)^(d+1) * sum_{n <= d} n^d z^n`` up to degree ``d``."""
    return hstar_by_series([n**d for n in range(d + 1)], d)


def _det(M: list[list[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    return sum(
        (-1) ** j * M[0][j] * _det([row[:j] + row[j + 1:] for row in M[1:]]) for j in range(n)
    )


def _adjugate(M: list[list[int]]) -> list[list[int]]:
    n = len(M)
    if n == 1:
        return [[1]]
    minor = lambda i, j: [r[:j] + r[j + 1:] for k, r in enumerate(M) if k != i]
    return [[(-1) ** (i + j) * _det(minor(j, i)) for j in range(n)] for i in range(n)]


def brute_force_dilate_count(generators: Sequence[Point], n: int) -> int:
    """``|n conv(generators) ∩ Z^d|`` by simplex cover, vectorized over the box."""
    import numpy as np

    gens = sorted(set(map(tuple, generators)))
    scaled = [tuple(n * x for x in g) for g in gens]
    box = np.array(bounding_box(scaled), dtype=np.int64)
    if n == 0 or len(gens) == 1:
        return 1
    inside = np.zeros(len(box), dtype=bool)
    for simplex in _affinely_independent_subsets(gens):
        V = np.array([[n * x for x in v] for v in simplex], dtype=np.int64)
        E = (V[1:] - V[0]).tolist()  # m x d edge vectors
        m = len(E)
        cols = next(
            c for c in itertools.combinations(range(len(E[0])), m)
            if _det([[E[i][j] for j in c] for i in range(m)]) != 0
        )
        M = [[E[i][j] for i in range(m)] for j in cols]  # M @ mu = (z - v0)[cols]
        det = _det(M)
        adj = np.array(_adjugate(M), dtype=np.int64)
        rel = box - V[0]
        mu = rel[:, list(cols)] @ adj.T  # det * barycentric weights of v1..vm
        lam0 = det - mu.sum(axis=1)
        sign = 1 if det > 0 else -1
        ok = (sign * mu >= 0).all(axis=1) & (sign * lam0 >= 0)
        ok &= (det * rel == mu @ np.array(E, dtype=np.int64)).all(axis=1)
        inside |= ok
    return int(inside.sum())
