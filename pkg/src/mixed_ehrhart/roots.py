"""Real roots and dilation behaviour of mixed h*-polynomials.

Root counting is exact: Sturm sequences over the rationals on the
square-free part, with multiplicities recovered from a square-free
factorization.  No floating point enters any decision.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import config
from .concurrency import ordered_map
from .ehrhart import volume
from .mixed import (
    HypothesisError,
    MixedHStarVector,
    PolytopeCollection,
    _collection,
    mixed_ehrhart,
    mixed_hstar_from_polynomial,
)
from .polynomial import UnivariatePolynomial, as_rational, format_rational, gcd

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EulerianPolynomial:
    d: int
    polynomial: UnivariatePolynomial

    @property
    def numbers(self) -> tuple[int, ...]:
        """``A(d, 1), ..., A(d, d)``."""
        return tuple(int(self.polynomial.coefficient(k)) for k in range(1, self.d + 1))


def eulerian(d: int) -> EulerianPolynomial:
    """Eulerian polynomial ``A_d(z) = sum_k A(d, k) z^k`` with ``A_d(0) = 0``."""
    if d < 1:
        raise ValueError("Eulerian polynomials are defined for d >= 1")
    row = [1]  # A(1, 1)
    for n in range(2, d + 1):
        new = [0] * n
        for k in range(1, n + 1):
            stay = k * row[k - 1] if k - 1 < len(row) else 0
            grow = (n - k + 1) * row[k - 2] if k >= 2 else 0
            new[k - 1] = stay + grow
        row = new
    return EulerianPolynomial(d, UnivariatePolynomial([0] + row))


# -- Sturm machinery ---------------------------------------------------------


def square_free_decomposition(p: UnivariatePolynomial) -> list[tuple[UnivariatePolynomial, int]]:
    """Yun's algorithm: monic pairwise-coprime ``(f_m, m)`` with ``p ~ prod f_m^m``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    out = []
    dp = p.derivative()
    a = gcd(p, dp)
    b = p // a
    c = dp // a
    dd = c - b.derivative()
    m = 1
    while b.degree and b.degree > 0:
        a = gcd(b, dd)
        if a.degree and a.degree > 0:
            out.append((a, m))
        b = b // a
        c = dd // a
        dd = c - b.derivative()
        m += 1
    return out


def sturm_sequence(p: UnivariatePolynomial) -> list[UnivariatePolynomial]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    return seq[:-1]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _variations(signs: Sequence[int]) -> int:
    s = [x for x in signs if x]
    return sum(1 for a, b in zip(s, s[1:]) if a != b)


def _variations_at(seq: Sequence[UnivariatePolynomial], x: Fraction) -> int:
    return _variations([_sign(q(x)) for q in seq])


def _variations_at_infinity(seq: Sequence[UnivariatePolynomial], positive: bool) -> int:
    signs = []
    for q in seq:
        s = _sign(q.leading_coefficient)
        if not positive and q.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def sturm_real_root_count(p: UnivariatePolynomial, lo: Fraction | int, hi: Fraction | int) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``."""
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    lo, hi = as_rational(lo), as_rational(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    sq = p // gcd(p, p.derivative()) if p.degree else p
    seq = sturm_sequence(sq)
    return _variations_at(seq, lo) - _variations_at(seq, hi)


def distinct_real_root_count(p: UnivariatePolynomial) -> int:
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if not p.degree:
        return 0
    sq = p // gcd(p, p.derivative())
    seq = sturm_sequence(sq)
    return _variations_at_infinity(seq, False) - _variations_at_infinity(seq, True)


def cauchy_bound(p: UnivariatePolynomial) -> Fraction:
    lc = p.leading_coefficient
    return 1 + max((abs(a / lc) for a in p.coefficients[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootInterval:
    """A real root in ``(lo, hi]`` with its multiplicity."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def to_json(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi), "multiplicity": self.multiplicity}


@dataclass(frozen=True)
class RootReport:
    real_rooted: bool
    degree: int
    intervals: tuple[RootInterval, ...]

    @property
    def real_root_count(self) -> int:
        """Real roots counted with multiplicity."""
        return sum(r.multiplicity for r in self.intervals)

    def to_json(self) -> dict:
        return {
            "real_rooted": self.real_rooted,
            "degree": self.degree,
            "roots": [r.to_json() for r in self.intervals],
        }


def isolate_real_roots(p: UnivariatePolynomial, tolerance: Fraction | None = None) -> list[RootInterval]:
    """Disjoint intervals ``(lo, hi]``, each holding exactly one distinct real root."""
    tol = config.ISOLATION_TOLERANCE if tolerance is None else as_rational(tolerance)
    if p.is_zero():
        raise ValueError("zero polynomial has infinitely many roots")
    if not p.degree:
        return []
    factors = square_free_decomposition(p)
    sq = p // gcd(p, p.derivative())
    seq = sturm_sequence(sq)
    bound = cauchy_bound(sq)
    stack = [(-bound, bound)]
    found: list[tuple[Fraction, Fraction]] = []
    while stack:
        lo, hi = stack.pop()
        n = _variations_at(seq, lo) - _variations_at(seq, hi)
        if n == 0:
            continue
        if n == 1 and hi - lo < tol:
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi))
        stack.append((lo, mid))
    found.sort()
    out = []
    for lo, hi in found:
        mult = next(m for f, m in factors if sturm_real_root_count(f, lo, hi) == 1)
        out.append(RootInterval(lo, hi, mult))
    return out


def is_real_rooted(p: UnivariatePolynomial, tolerance: Fraction | None = None) -> RootReport:
    if p.is_zero():
        raise ValueError("zero polynomial")
    intervals = isolate_real_roots(p, tolerance)
    total = sum(r.multiplicity for r in intervals)
    return RootReport(total == p.degree, p.degree, tuple(intervals))


def is_log_concave(seq: Sequence[int | Fraction]) -> bool:
    if not seq:
        raise ValueError("empty sequence")
    return all(seq[i] * seq[i] >= seq[i - 1] * seq[i + 1] for i in range(1, len(seq) - 1))


def is_unimodal(seq: Sequence[int | Fraction]) -> bool:
    if not seq:
        raise ValueError("empty sequence")
    i = 0
    n = len(seq)
    while i + 1 < n and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < n and seq[i] >= seq[i + 1]:
        i += 1
    return i == n - 1


# -- dilation asymptotics --------------------------------------------------


def asymptotic_scalar(collection: PolytopeCollection | Sequence) -> Fraction:
    """``sum_J (-1)^{k-|J|} vol(P_J)``, the factor in front of ``A_d``."""
    c = _collection(collection)
    if not c.all_full_dimensional:
        raise HypothesisError("asymptotic limit needs full-dimensional polytopes")
    return sum((c.sign(J) * volume(c.subsum(J)) for J in c.subsets(include_empty=False)), Fraction(0))


def asymptotic_limit(collection: PolytopeCollection | Sequence) -> UnivariatePolynomial:
    """Limit of ``h*_{rP}(z) / r^d`` as ``r`` grows."""
    c = _collection(collection)
    return eulerian(c.d).polynomial * asymptotic_scalar(c)


def coefficient_distance(p: UnivariatePolynomial, q: UnivariatePolynomial) -> Fraction:
    n = max(len(p.coefficients), len(q.coefficients))
    return max((abs(p.coefficient(i) - q.coefficient(i)) for i in range(n)), default=Fraction(0))


@dataclass(frozen=True)
class DilationReport:
    r: int
    hstar: MixedHStarVector
    real_rooted: bool
    positive_tail: bool
    log_concave: bool
    unimodal: bool
    distance: Fraction

    @property
    def all_hold(self) -> bool:
        return self.real_rooted and self.positive_tail and self.log_concave and self.unimodal

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "hstar": self.hstar.to_json(),
            "real_rooted": self.real_rooted,
            "positive_tail": self.positive_tail,
            "log_concave": self.log_concave,
            "unimodal": self.unimodal,
            "distance": format_rational(self.distance),
        }


def dilation_report(
    me: UnivariatePolynomial, d: int, r: int, limit: UnivariatePolynomial
) -> DilationReport:
    h = mixed_hstar_from_polynomial(me.scale_variable(r), d)
    entries = h.entries
    poly = h.polynomial()
    real = (not poly.is_zero()) and is_real_rooted(poly).real_rooted
    scaled = poly * Fraction(1, r**d)
    return DilationReport(
        r=r,
        hstar=h,
        real_rooted=real,
        positive_tail=all(x > 0 for x in entries[1:]),
        log_concave=is_log_concave(entries),
        unimodal=is_unimodal(entries),
        distance=coefficient_distance(scaled, limit),
    )


def scan_dilates(
    collection: PolytopeCollection | Sequence, r_max: int, workers: int | None = None
) -> list[DilationReport]:
    """Diagnostics of ``h*(rP)`` for ``r = 1..r_max`` via ``ME_P(r n)``."""
    c = _collection(collection)
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    if not c.all_full_dimensional:
        raise HypothesisError("dilation scan needs full-dimensional polytopes")
    me = mixed_ehrhart(c, workers).polynomial
    limit = asymptotic_limit(c)
    return ordered_map(lambda r: dilation_report(me, c.d, r, limit), range(1, r_max + 1), workers)


NOT_FOUND = "not found below r_max"


def find_min_r(collection: PolytopeCollection | Sequence, r_max: int, workers: int | None = None) -> int | str:
    """Smallest ``r`` such that every diagnostic holds on ``r..r_max``.

    This is an empirical witness, not a certified threshold.
    """
    reports = scan_dilates(collection, r_max, workers)
    best: int | str = NOT_FOUND
    for rep in reversed(reports):
        if not rep.all_hold:
            break
        best = rep.r
    return best


def root_distance(p: UnivariatePolynomial, q: UnivariatePolynomial) -> float:
    """Largest gap between matched sorted real roots (for reporting only)."""
    a = [float(r.midpoint) for r in isolate_real_roots(p)]
    b = [float(r.midpoint) for r in isolate_real_roots(q)]
    if len(a) != len(b):
        return math.inf
    return max((abs(x - y) for x, y in zip(a, b)), default=0.0)
