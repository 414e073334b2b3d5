"""Discrete mixed volumes, mixed Ehrhart polynomials and mixed h*-vectors.

For a collection ``(P_1, ..., P_k)`` the discrete mixed volume is the
alternating sum of lattice-point counts of all subsums ``P_J`` (with the
empty subsum being the origin), and the mixed Ehrhart polynomial is the same
alternating sum of Ehrhart polynomials.  The module also provides the
closed-form special cases used to cross-check those definitions.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .concurrency import ordered_map
from .ehrhart import (
    MixedVolumeTable,
    ehrhart,
    hstar,
    mixed_volume_table,
    multivariate_ehrhart,
)
from .enumeration import count_points, enumerate_points
from .geometry import (
    GeometryError,
    LatticePolytope,
    Location,
    contains,
    dilate,
    face_in_direction,
    hyperplane_frame,
    minkowski_sum,
    origin,
)
from .polynomial import (
    UnivariatePolynomial,
    binomial_polynomial,
    stirling2,
    to_binomial_basis,
)

log = logging.getLogger(__name__)

Subset = tuple[int, ...]


class HypothesisError(ValueError):
    """A structural precondition of a formula does not hold."""


class ConsistencyError(AssertionError):
    """Two exact routes to the same quantity disagreed."""


def _signed_comb(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


class PolytopeCollection:
    """A sequence ``P_1..P_k`` of lattice polytopes in a common ``Z^d``.

    Subsums ``P_J`` are built lazily and cached; the empty subsum is the
    origin.
    """

    def __init__(self, polytopes: Iterable[LatticePolytope]):
        self.polytopes: tuple[LatticePolytope, ...] = tuple(polytopes)
        if not self.polytopes:
            raise GeometryError("a collection needs at least one polytope")
        dims = {P.ambient_dimension for P in self.polytopes}
        if len(dims) != 1:
            raise GeometryError(f"ambient dimension mismatch in collection: {sorted(dims)}")
        self.d = dims.pop()
        self.k = len(self.polytopes)
        self._subsums: dict[Subset, LatticePolytope] = {(): origin(self.d)}
        self._ehrhart: dict[Subset, UnivariatePolynomial] = {}

    def __len__(self) -> int:
        return self.k

    def __iter__(self):
        return iter(self.polytopes)

    def __getitem__(self, i: int) -> LatticePolytope:
        return self.polytopes[i]

    def __repr__(self) -> str:
        return f"PolytopeCollection(k={self.k}, d={self.d}, polytopes={list(self.polytopes)})"

    def subsets(self, include_empty: bool = True) -> list[Subset]:
        """All index subsets by increasing size, then lexicographically."""
        start = 0 if include_empty else 1
        return [J for r in range(start, self.k + 1) for J in itertools.combinations(range(self.k), r)]

    def subsum(self, J: Sequence[int]) -> LatticePolytope:
        J = tuple(sorted(J))
        if J not in self._subsums:
            if len(J) == 1:
                self._subsums[J] = self.polytopes[J[0]]
            else:
                self._subsums[J] = minkowski_sum(self.subsum(J[:-1]), self.polytopes[J[-1]])
        return self._subsums[J]

    @property
    def full_sum(self) -> LatticePolytope:
        return self.subsum(range(self.k))

    @property
    def sum_dimension(self) -> int:
        return self.full_sum.dimension

    @property
    def all_full_dimensional(self) -> bool:
        return all(P.is_full_dimensional for P in self.polytopes)

    def sign(self, J: Sequence[int]) -> int:
        return -1 if (self.k - len(J)) % 2 else 1

    def subsum_ehrhart(self, J: Sequence[int]) -> UnivariatePolynomial:
        J = tuple(sorted(J))
        if J not in self._ehrhart:
            self._ehrhart[J] = ehrhart(self.subsum(J)).polynomial
        return self._ehrhart[J]

    def dilate(self, r: int) -> "PolytopeCollection":
        return PolytopeCollection(dilate(P, r) for P in self.polytopes)

    def permuted(self, order: Sequence[int]) -> "PolytopeCollection":
        return PolytopeCollection(self.polytopes[i] for i in order)

    def to_json(self) -> list[dict]:
        return [P.to_json() for P in self.polytopes]


@dataclass(frozen=True)
class SubsetTerm:
    subset: Subset
    sign: int
    count: int
    ehrhart: UnivariatePolynomial

    def to_json(self) -> dict:
        return {
            "subset": list(self.subset),
            "sign": self.sign,
            "count": self.count,
            "ehrhart": self.ehrhart.to_json(),
        }


@dataclass(frozen=True)
class MixedEhrhartResult:
    polynomial: UnivariatePolynomial
    coefficients: tuple[Fraction, ...]
    dmv: int
    terms: tuple[SubsetTerm, ...] = field(default=(), compare=False)

    def __call__(self, n: int) -> Fraction:
        return self.polynomial(n)


@dataclass(frozen=True)
class MixedHStarVector:
    """Mixed h*-vector; unlike the usual h*-vector its entries may be negative."""

    entries: tuple[int, ...]
    d: int

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def polynomial(self) -> UnivariatePolynomial:
        return UnivariatePolynomial(self.entries)

    def to_json(self) -> list[int]:
        return list(self.entries)


def _collection(c: PolytopeCollection | Sequence[LatticePolytope]) -> PolytopeCollection:
    return c if isinstance(c, PolytopeCollection) else PolytopeCollection(c)


def dmv(collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None) -> int:
    """Discrete mixed volume by inclusion-exclusion over lattice-point counts."""
    c = _collection(collection)
    subsets = c.subsets()
    counts = ordered_map(lambda J: count_points(c.subsum(J)).total, subsets, workers)
    total = sum(c.sign(J) * n for J, n in zip(subsets, counts))
    log.debug("dmv over %d subsets = %d", len(subsets), total)
    return total


def mixed_ehrhart(
    collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None
) -> MixedEhrhartResult:
    c = _collection(collection)
    subsets = c.subsets()
    ordered_map(c.subsum_ehrhart, subsets[1:], workers)
    acc = UnivariatePolynomial()
    terms = []
    for J in subsets:
        E = c.subsum_ehrhart(J) if J else UnivariatePolynomial([1])
        acc = acc + E * c.sign(J)
        terms.append(SubsetTerm(J, c.sign(J), int(E(1)), E))
    value = acc(1)
    if value.denominator != 1:
        raise ConsistencyError(f"mixed Ehrhart polynomial is not integral at 1: {value}")
    return MixedEhrhartResult(acc, tuple(acc.padded(c.d + 1)), int(value), tuple(terms))


def me_from_multivariate(
    collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None
) -> tuple[Fraction, ...]:
    """Mixed Ehrhart coefficients as sums of ``e_alpha`` over ``alpha >= 1``."""
    c = _collection(collection)
    E = multivariate_ehrhart(c.polytopes, workers)
    me = [Fraction(0)] * (c.d + 1)
    for alpha, coeff in E.terms.items():
        if all(a >= 1 for a in alpha):
            me[sum(alpha)] += coeff
    return tuple(me)


def me_top(collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None) -> Fraction:
    """Leading mixed Ehrhart coefficient from the mixed volume table."""
    c = _collection(collection)
    if c.sum_dimension != c.d:
        raise GeometryError("the sum of the collection is not full-dimensional")
    value = mixed_volume_table(c.polytopes, workers).weighted_sum(strictly_positive=True)
    if value <= 0:
        raise ConsistencyError(f"top mixed Ehrhart coefficient must be positive, got {value}")
    return value


def me_second_contributions(
    collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None
) -> list[tuple[tuple[int, ...], MixedVolumeTable]]:
    """Per facet normal of the sum: the mixed volume table of the projected faces."""
    c = _collection(collection)
    if not c.all_full_dimensional:
        raise HypothesisError("the second-coefficient formula requires full-dimensional polytopes")
    out = []
    for a, _ in c.full_sum.facets:
        frame = hyperplane_frame(a)
        faces = [face_in_direction(P, a, frame).face for P in c.polytopes]
        out.append((a, mixed_volume_table(faces, workers)))
    return out


def me_second(collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None) -> Fraction:
    """Second mixed Ehrhart coefficient from facet mixed volumes."""
    total = sum(
        (table.weighted_sum(strictly_positive=True) for _, table in me_second_contributions(collection, workers)),
        Fraction(0),
    )
    return total / 2


def bernstein_mixed_volume(
    collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None
) -> Fraction:
    """``MV_d(P_1, ..., P_d)`` for ``k == d``, where ME is ``d! MV n^d``."""
    c = _collection(collection)
    if c.k != c.d:
        raise HypothesisError(f"need exactly d={c.d} polytopes, got {c.k}")
    if c.sum_dimension != c.d:
        raise GeometryError("the sum of the collection is not full-dimensional")
    me = mixed_ehrhart(c, workers)
    if any(me.coefficients[i] for i in range(c.d)):
        raise ConsistencyError(f"mixed Ehrhart polynomial is not a pure monomial: {me.polynomial}")
    return me.coefficients[c.d] / math.factorial(c.d)


def mixed_hstar(collection: PolytopeCollection | Sequence[LatticePolytope], workers: int | None = None) -> MixedHStarVector:
    """Binomial-basis coefficients of the mixed Ehrhart polynomial in degree ``dim(sum)``."""
    c = _collection(collection)
    return mixed_hstar_from_polynomial(mixed_ehrhart(c, workers).polynomial, c.sum_dimension)


def mixed_hstar_from_polynomial(me: UnivariatePolynomial, d: int) -> MixedHStarVector:
    h = to_binomial_basis(me, d)
    if not h.is_integral():
        raise ConsistencyError(f"mixed h*-vector is not integral: {h.entries}")
    return MixedHStarVector(h.as_integers(), d)


def mixed_hstar_direct(collection: PolytopeCollection | Sequence[LatticePolytope]) -> MixedHStarVector:
    """Mixed h*-vector from the h*-vectors of the nonempty subsums.

    Only valid when every member is full-dimensional.
    """
    c = _collection(collection)
    if not c.all_full_dimensional:
        raise HypothesisError("direct mixed h* formula needs full-dimensional polytopes")
    d = c.d
    h = [(-1) ** (c.k + i) * math.comb(d, i) for i in range(d + 1)]
    for J in c.subsets(include_empty=False):
        hj = hstar(c.subsum(J))
        for i in range(d + 1):
            h[i] += c.sign(J) * hj[i]
    return MixedHStarVector(tuple(h), d)


def single_polytope_me(P: LatticePolytope, k: int) -> UnivariatePolynomial:
    """Mixed Ehrhart polynomial of ``k`` copies of ``P`` from ``h*(P)`` alone."""
    if not P.is_full_dimensional:
        raise HypothesisError("formula needs a full-dimensional polytope")
    if k < 1:
        raise ValueError("k must be positive")
    d = P.ambient_dimension
    h = hstar(P)
    acc = UnivariatePolynomial()
    for j in range(d + 1):
        if h[j] == 0:
            continue
        inner = UnivariatePolynomial()
        for i in range(k + 1):
            inner = inner + binomial_polynomial(d - j, d, scale=i) * ((-1) ** (k - i) * math.comb(k, i))
        acc = acc + inner * h[j]
    return acc


def single_polytope_dmv(P: LatticePolytope, k: int) -> int:
    if not P.is_full_dimensional:
        raise HypothesisError("formula needs a full-dimensional polytope")
    d = P.ambient_dimension
    h = hstar(P)
    return sum(_signed_comb(d - j, d - k) * h[j] for j in range(d + 1))


def complementary_dmv_oracle(collection: PolytopeCollection | Sequence[LatticePolytope]) -> int:
    """Count points of the full sum lying in no proper subsum.

    Requires every polytope to contain the origin and the dimensions to add
    up; under those hypotheses the count equals the discrete mixed volume.
    """
    c = _collection(collection)
    zero = (0,) * c.d
    if any(contains(P, zero) is Location.OUTSIDE for P in c.polytopes) or c.sum_dimension != sum(
        P.dimension for P in c.polytopes
    ):
        raise HypothesisError("complementary-dimension hypothesis fails")
    proper = [c.subsum(J) for J in c.subsets() if len(J) < c.k]
    return sum(
        1
        for z in enumerate_points(c.full_sum)
        if all(contains(Q, z) is Location.OUTSIDE for Q in proper)
    )


def cube_reference(d: int, k: int) -> tuple[int, ...]:
    """Mixed Ehrhart coefficients of ``k`` unit ``d``-cubes in closed form."""
    if d < 1 or k < 1:
        raise ValueError("d and k must be positive")
    return tuple(math.comb(d, i) * math.factorial(k) * stirling2(i, k) for i in range(d + 1))


def mixed_ehrhart_of_dilate(me: UnivariatePolynomial, r: int) -> UnivariatePolynomial:
    """``ME_{rP}(n) = ME_P(r n)``."""
    return me.scale_variable(r)
