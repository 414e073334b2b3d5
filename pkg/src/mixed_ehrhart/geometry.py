"""Lattice polytopes with exact facet data.

A :class:`LatticePolytope` is the convex hull of a finite set of integer
points.  Its affine hull, facets, vertices and edge directions are computed
eagerly at construction, so instances are immutable values.

Facets are found from edge directions: every facet of an ``m``-dimensional
polytope is spanned by ``m - 1`` of its edge directions.  For a set of raw
generators the pairwise differences are a superset of the edge directions;
for a Minkowski sum the union of the summands' edge directions is.  Each
candidate normal is accepted when the face it cuts out has dimension
``m - 1``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import (
    SublatticeFrame,
    Vector,
    column_reduce,
    dot,
    integer_kernel,
    rank,
    sign_normalized,
)


class GeometryError(ValueError):
    pass


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class HalfspaceDescription:
    """``equations``: ``<c, x> == e`` pairs cutting out the affine hull.
    ``facets``: ``<a, x> <= b`` pairs, ``a`` primitive and lying in the
    direction space of the polytope.
    """

    equations: tuple[tuple[Vector, int], ...]
    facets: tuple[tuple[Vector, int], ...]


def _as_point(p: Iterable[int]) -> Vector:
    out = []
    for x in p:
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, float) and x.is_integer():
                x = int(x)
            else:
                raise GeometryError(f"lattice points need integer coordinates, got {x!r}")
        out.append(int(x))
    return tuple(out)


def _difference_directions(points: Sequence[Vector]) -> set[Vector]:
    dirs = set()
    for p, q in itertools.combinations(points, 2):
        dirs.add(sign_normalized(tuple(a - b for a, b in zip(q, p))))
    return dirs


def _affine_rank(points: Sequence[Vector]) -> int:
    if len(points) < 2:
        return 0
    p0 = points[0]
    return rank([tuple(a - b for a, b in zip(p, p0)) for p in points[1:]])


class LatticePolytope:
    """Convex hull of integer points in ``Z^d``.

    Args:
        generators: integer points whose convex hull is the polytope.  They
            need not be vertices.
        edge_directions: optional superset of the edge directions, used to
            speed up the facet search (Minkowski sums pass the union of the
            summands' edge directions).
    """

    __slots__ = (
        "ambient_dimension",
        "generators",
        "dimension",
        "equations",
        "facets",
        "vertices",
        "edge_directions",
        "_frame",
    )

    def __init__(self, generators: Iterable[Iterable[int]], *, edge_directions: Iterable[Vector] | None = None):
        pts = sorted({_as_point(p) for p in generators})
        if not pts:
            raise GeometryError("a polytope needs at least one generator")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise GeometryError("all points must have the same length")
        self.ambient_dimension = d
        self.generators: tuple[Vector, ...] = tuple(pts)

        p0 = pts[0]
        diffs = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
        eq_normals = integer_kernel(diffs, d) if diffs else [
            tuple(int(i == j) for j in range(d)) for i in range(d)
        ]
        self.equations: tuple[tuple[Vector, int], ...] = tuple(
            sorted((c, dot(c, p0)) for c in eq_normals)
        )
        self.dimension = d - len(self.equations)

        if edge_directions is None:
            candidates = _difference_directions(pts)
        else:
            candidates = {sign_normalized(v) for v in edge_directions if any(v)}
        self.facets = self._find_facets(candidates)
        self.vertices, self.edge_directions = self._vertices_and_edges()
        self._frame: SublatticeFrame | None = None

    # construction helpers -------------------------------------------------

    def _find_facets(self, directions: set[Vector]) -> tuple[tuple[Vector, int], ...]:
        m = self.dimension
        if m == 0:
            return ()
        eq_rows = [c for c, _ in self.equations]
        dirs = sorted(directions)
        normals: set[Vector] = set()
        for combo in itertools.combinations(dirs, m - 1):
            rows = list(combo) + eq_rows
            _, U, r = column_reduce(rows, self.ambient_dimension)
            if r != self.ambient_dimension - 1:
                continue
            normals.add(sign_normalized(tuple(U[i][-1] for i in range(self.ambient_dimension))))
        facets = []
        for n in normals:
            for a in (n, tuple(-x for x in n)):
                vals = [dot(a, p) for p in self.generators]
                b = max(vals)
                face = [p for p, v in zip(self.generators, vals) if v == b]
                if _affine_rank(face) == m - 1:
                    facets.append((a, b))
        return tuple(sorted(facets))

    def _vertices_and_edges(self) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
        m = self.dimension
        if m == 0:
            return self.generators, ()
        tight: dict[Vector, frozenset[int]] = {}
        for p in self.generators:
            tight[p] = frozenset(i for i, (a, b) in enumerate(self.facets) if dot(a, p) == b)
        vertices = [
            p for p in self.generators
            if rank([self.facets[i][0] for i in tight[p]]) == m
        ]
        edges = set()
        for u, v in itertools.combinations(vertices, 2):
            common = tight[u] & tight[v]
            if rank([self.facets[i][0] for i in common]) == m - 1:
                edges.add(sign_normalized(tuple(b - a for a, b in zip(u, v))))
        return tuple(vertices), tuple(sorted(edges))

    # basic protocol -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return (
            f"LatticePolytope(dim={self.dimension}, ambient={self.ambient_dimension}, "
            f"vertices={list(self.vertices)})"
        )

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}

    @property
    def is_full_dimensional(self) -> bool:
        return self.dimension == self.ambient_dimension

    def support(self, a: Sequence[int]) -> int:
        """``max <a, x>`` over the polytope."""
        return max(dot(a, v) for v in self.vertices)

    @property
    def frame(self) -> SublatticeFrame:
        """Lattice coordinates on the direction space of the affine hull."""
        if self._frame is None:
            self._frame = SublatticeFrame([c for c, _ in self.equations], self.ambient_dimension)
        return self._frame

    @property
    def base_point(self) -> Vector:
        return self.generators[0]


def origin(d: int) -> LatticePolytope:
    return LatticePolytope([(0,) * d])


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    """``P + Q``, generated by pairwise sums of vertices."""
    if P.ambient_dimension != Q.ambient_dimension:
        raise GeometryError(
            f"ambient dimension mismatch: {P.ambient_dimension} vs {Q.ambient_dimension}"
        )
    pts = {tuple(a + b for a, b in zip(v, w)) for v in P.vertices for w in Q.vertices}
    return LatticePolytope(pts, edge_directions=set(P.edge_directions) | set(Q.edge_directions))


def minkowski_sum_all(polytopes: Sequence[LatticePolytope], d: int | None = None) -> LatticePolytope:
    if not polytopes:
        if d is None:
            raise GeometryError("empty Minkowski sum needs an ambient dimension")
        return origin(d)
    acc = polytopes[0]
    for P in polytopes[1:]:
        acc = minkowski_sum(acc, P)
    return acc


def dilate(P: LatticePolytope, r: int) -> LatticePolytope:
    if r < 0:
        raise GeometryError("dilation factor must be non-negative")
    if r == 0:
        return origin(P.ambient_dimension)
    if r == 1:
        return P
    return LatticePolytope(
        [tuple(r * x for x in v) for v in P.vertices], edge_directions=P.edge_directions
    )


def translate(P: LatticePolytope, t: Sequence[int]) -> LatticePolytope:
    return LatticePolytope(
        [tuple(x + s for x, s in zip(v, t)) for v in P.vertices], edge_directions=P.edge_directions
    )


def halfspace_description(P: LatticePolytope) -> HalfspaceDescription:
    return HalfspaceDescription(P.equations, P.facets)


def contains(P: LatticePolytope, z: Sequence[int]) -> Location:
    z = _as_point(z)
    if len(z) != P.ambient_dimension:
        raise GeometryError(f"point has length {len(z)}, polytope lives in Z^{P.ambient_dimension}")
    if any(dot(c, z) != e for c, e in P.equations):
        return Location.OUTSIDE
    strict = True
    for a, b in P.facets:
        v = dot(a, z)
        if v > b:
            return Location.OUTSIDE
        if v == b:
            strict = False
    return Location.INTERIOR if strict else Location.BOUNDARY


def facet_normals(P: LatticePolytope) -> list[Vector]:
    if not P.is_full_dimensional:
        raise GeometryError("facet normals require full dimension")
    return [a for a, _ in P.facets]


@dataclass(frozen=True)
class ProjectedFace:
    """The face of a polytope maximizing ``normal``, translated into
    ``normal^perp`` and written in a lattice basis of ``normal^perp ∩ Z^d``."""

    face: LatticePolytope
    normal: Vector


def hyperplane_frame(a: Sequence[int]) -> SublatticeFrame:
    if not any(a):
        raise GeometryError("direction must be nonzero")
    return SublatticeFrame([tuple(a)], len(a))


def face_in_direction(P: LatticePolytope, a: Sequence[int], frame: SublatticeFrame | None = None) -> ProjectedFace:
    a = tuple(int(x) for x in a)
    if len(a) != P.ambient_dimension:
        raise GeometryError("direction has the wrong length")
    if frame is None:
        frame = hyperplane_frame(a)
    b = P.support(a)
    face = [v for v in P.vertices if dot(a, v) == b]
    base = face[0]
    coords = [frame.coordinates(tuple(x - y for x, y in zip(v, base))) for v in face]
    return ProjectedFace(LatticePolytope(coords), a)
