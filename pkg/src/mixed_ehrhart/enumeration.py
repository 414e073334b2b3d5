"""Exact lattice-point counting and enumeration.

Points are counted in lattice coordinates of the affine hull, so lower
dimensional polytopes are handled by the same full-dimensional scan.  The
scan walks a bounding box over all but the last coordinate and solves for
the last coordinate's interval from the facet inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .geometry import LatticePolytope, minkowski_sum_all
from .lattice import SublatticeFrame, Vector, dot


@dataclass(frozen=True)
class CountResult:
    total: int
    interior: int

    def to_json(self) -> dict:
        return {"total": self.total, "interior": self.interior}


@dataclass(frozen=True)
class LinearSystem:
    """``{origin + frame.lift(y) : A y <= b, lo <= y <= hi}``."""

    A: tuple[Vector, ...]
    b: tuple[int, ...]
    lo: tuple[int, ...]
    hi: tuple[int, ...]
    frame: SublatticeFrame
    origin: Vector


def weighted_sum_system(
    polytopes: Sequence[LatticePolytope],
    weights: Sequence[int],
    hull: LatticePolytope | None = None,
) -> LinearSystem:
    """Inequality system of ``sum_i weights[i] * polytopes[i]``.

    ``hull`` must be the Minkowski sum of the polytopes with positive weight;
    its facet normals are exactly those of every positive combination of
    them, with offsets given by support functions.
    """
    if len(polytopes) != len(weights):
        raise ValueError("one weight per polytope is required")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    d = polytopes[0].ambient_dimension
    active = [(P, w) for P, w in zip(polytopes, weights) if w > 0]
    if hull is None or not active:
        hull = minkowski_sum_all([P for P, _ in active], d)
    frame = hull.frame
    origin = tuple(sum(w * P.base_point[i] for P, w in active) for i in range(d))
    m = frame.m
    lo = [0] * m
    hi = [0] * m
    for P, w in active:
        coords = [frame.coordinates(tuple(x - y for x, y in zip(v, P.base_point))) for v in P.vertices]
        for j in range(m):
            lo[j] += w * min(c[j] for c in coords)
            hi[j] += w * max(c[j] for c in coords)
    A = []
    b = []
    for a, _ in hull.facets:
        A.append(frame.pull_back_functional(a))
        b.append(sum(w * P.support(a) for P, w in active) - dot(a, origin))
    return LinearSystem(tuple(A), tuple(b), tuple(lo), tuple(hi), frame, origin)


def polytope_system(P: LatticePolytope) -> LinearSystem:
    return weighted_sum_system([P], [1], hull=P)


def count_system(system: LinearSystem) -> CountResult:
    total, interior = kernels.count_box(system.A, system.b, system.lo, system.hi)
    return CountResult(total, interior)


def count_points(P: LatticePolytope) -> CountResult:
    """Number of lattice points of ``P`` and of its relative interior."""
    return count_system(polytope_system(P))


def count_weighted_sum(
    polytopes: Sequence[LatticePolytope],
    weights: Sequence[int],
    hull: LatticePolytope | None = None,
) -> CountResult:
    return count_system(weighted_sum_system(polytopes, weights, hull))


def enumerate_points(P: LatticePolytope) -> list[Vector]:
    """All lattice points of ``P`` in lexicographic order."""
    s = polytope_system(P)
    pts = [
        tuple(o + x for o, x in zip(s.origin, s.frame.lift(y)))
        for y in kernels.enumerate_box(s.A, s.b, s.lo, s.hi)
    ]
    return sorted(pts)
