"""Ehrhart polynomials, h*-vectors, volumes and mixed volumes.

Every quantity here comes out of exact lattice-point counts: Ehrhart
polynomials are interpolated from counts of dilates, and volumes and mixed
volumes are read off their top-degree coefficients.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .concurrency import ordered_map
from .enumeration import count_weighted_sum
from .geometry import GeometryError, LatticePolytope, minkowski_sum_all
from .polynomial import (
    MultivariatePolynomial,
    UnivariatePolynomial,
    format_rational,
    interpolate_multivariate,
    interpolate_univariate,
    multinomial,
    to_binomial_basis,
)

log = logging.getLogger(__name__)


class EhrhartValidationError(AssertionError):
    """An interpolated polynomial disagreed with a held-out count."""


@dataclass(frozen=True)
class EhrhartPolynomial:
    polytope: LatticePolytope
    polynomial: UnivariatePolynomial
    dimension: int

    def __call__(self, n: int) -> Fraction:
        return self.polynomial(n)

    def coefficient(self, i: int) -> Fraction:
        return self.polynomial.coefficient(i)

    @property
    def coefficients(self) -> list[Fraction]:
        return self.polynomial.padded(self.dimension + 1)


@dataclass(frozen=True)
class HStarVector:
    """Integer coefficients of a polynomial in the basis ``C(n+d-j, d)``."""

    entries: tuple[int, ...]
    d: int

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def polynomial(self) -> UnivariatePolynomial:
        """The h*-polynomial ``sum_i h_i z^i``."""
        return UnivariatePolynomial(self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class MixedVolumeTable:
    """Normalized mixed volumes ``MV_d(P_1[a_1], ..., P_k[a_k])`` by ``a``."""

    d: int
    k: int
    entries: dict[tuple[int, ...], Fraction]

    def __getitem__(self, alpha: Sequence[int]) -> Fraction:
        return self.entries[tuple(alpha)]

    def weighted_sum(self, strictly_positive: bool = True) -> Fraction:
        """``sum multinomial(d; a) * MV(a)``, optionally over ``a >= 1`` only."""
        return sum(
            (
                multinomial(self.d, a) * v
                for a, v in self.entries.items()
                if not strictly_positive or all(x >= 1 for x in a)
            ),
            Fraction(0),
        )

    def to_json(self) -> list[dict]:
        return [{"alpha": list(a), "value": format_rational(v)} for a, v in sorted(self.entries.items())]


def dilate_count(P: LatticePolytope, n: int) -> int:
    return count_weighted_sum([P], [n], hull=P).total


def ehrhart(P: LatticePolytope, holdout: int = 0) -> EhrhartPolynomial:
    """Ehrhart polynomial of ``P`` interpolated from counts at ``n = 0..dim P``.

    ``holdout`` extra dilates ``dim P + 1, ...`` are counted and compared
    against the interpolant; a mismatch raises :class:`EhrhartValidationError`.
    """
    m = P.dimension
    samples = [(n, dilate_count(P, n)) for n in range(m + 1)]
    poly = interpolate_univariate(samples)
    for n in range(m + 1, m + 1 + holdout):
        got = dilate_count(P, n)
        if poly(n) != got:
            raise EhrhartValidationError(
                f"Ehrhart interpolant gives {poly(n)} at n={n}, direct count {got} for {P!r}"
            )
    return EhrhartPolynomial(P, poly, m)


def multivariate_ehrhart(
    polytopes: Sequence[LatticePolytope], workers: int | None = None
) -> MultivariatePolynomial:
    """``|n_1 P_1 + ... + n_k P_k ∩ Z^d|`` as a polynomial in ``n_1..n_k``."""
    if not polytopes:
        raise ValueError("need at least one polytope")
    d = polytopes[0].ambient_dimension
    if any(P.ambient_dimension != d for P in polytopes):
        raise GeometryError("polytopes live in different ambient dimensions")
    bounds = [P.dimension for P in polytopes]
    grid = list(itertools.product(*(range(b + 1) for b in bounds)))

    hulls: dict[tuple[int, ...], LatticePolytope] = {}
    for node in grid:
        support = tuple(i for i, w in enumerate(node) if w > 0)
        if support and support not in hulls:
            hulls[support] = minkowski_sum_all([polytopes[i] for i in support])

    def count(node: tuple[int, ...]) -> int:
        support = tuple(i for i, w in enumerate(node) if w > 0)
        if not support:
            return 1
        return count_weighted_sum(
            [polytopes[i] for i in support], [node[i] for i in support], hull=hulls[support]
        ).total

    values = dict(zip(grid, ordered_map(count, grid, workers)))
    log.debug("multivariate Ehrhart grid %s: %d counts", bounds, len(grid))
    poly = interpolate_multivariate(bounds, lambda *node: values[node], values)
    # one node outside the grid, counted directly
    check = tuple(b + 1 for b in bounds)
    hulls.setdefault(tuple(range(len(polytopes))), minkowski_sum_all(list(polytopes)))
    got = count(check)
    if poly(*check) != got:
        raise EhrhartValidationError(
            f"multivariate interpolant gives {poly(*check)} at {check}, direct count {got}"
        )
    return poly


def hstar_from_polynomial(E: EhrhartPolynomial | UnivariatePolynomial, d: int | None = None) -> HStarVector:
    if isinstance(E, EhrhartPolynomial):
        poly, d = E.polynomial, E.dimension if d is None else d
    else:
        poly = E
        if d is None:
            raise ValueError("dimension is required for a bare polynomial")
    h = to_binomial_basis(poly, d)
    if not h.is_integral():
        raise ValueError("input is not an Ehrhart polynomial")
    return HStarVector(h.as_integers(), d)


def hstar(P: LatticePolytope) -> HStarVector:
    return hstar_from_polynomial(ehrhart(P))


def volume(P: LatticePolytope) -> Fraction:
    """Lattice volume of ``P`` inside its affine hull (leading Ehrhart coefficient)."""
    return ehrhart(P).polynomial.leading_coefficient


def mixed_volume_table(polytopes: Sequence[LatticePolytope], workers: int | None = None) -> MixedVolumeTable:
    d = polytopes[0].ambient_dimension
    total = minkowski_sum_all(list(polytopes))
    if total.dimension != d:
        raise GeometryError(
            f"mixed volumes need a full-dimensional sum (dim {total.dimension} in Z^{d})"
        )
    k = len(polytopes)
    top = multivariate_ehrhart(polytopes, workers).homogeneous_part(d)
    entries = {}
    for alpha in itertools.product(range(d + 1), repeat=k):
        if sum(alpha) == d:
            entries[alpha] = top.coefficient(alpha) / multinomial(d, alpha)
    return MixedVolumeTable(d, k, entries)
