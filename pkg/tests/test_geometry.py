import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mixed_ehrhart import oracles
from mixed_ehrhart.geometry import (
    GeometryError,
    LatticePolytope,
    Location,
    contains,
    dilate,
    face_in_direction,
    facet_normals,
    minkowski_sum,
    translate,
)
from mixed_ehrhart.io import cube, segment, simplex
from mixed_ehrhart.lattice import dot

points3 = st.lists(st.tuples(*[st.integers(0, 3)] * 3), min_size=1, max_size=7)
points2 = st.lists(st.tuples(*[st.integers(0, 3)] * 2), min_size=1, max_size=7)


def brute_facet_normals(points, bound=2):
    """Primitive normals whose maximizing face has affine dimension d - 1."""
    d = len(points[0])
    out = set()
    for a in itertools.product(range(-bound, bound + 1), repeat=d):
        if not any(a) or math.gcd(*a) != 1:
            continue
        top = max(dot(a, p) for p in points)
        face = [p for p in points if dot(a, p) == top]
        vecs = [[Fraction(x - y) for x, y in zip(p, face[0])] for p in face[1:]]
        if vecs and oracles._rank(vecs) == d - 1:
            out.add(a)
    return out


def test_cube_and_simplex_facets():
    assert len(cube(3).facets) == 6
    assert len(simplex(3).facets) == 4
    assert set(facet_normals(cube(3))) == brute_facet_normals(list(cube(3).vertices))


def test_cube_plus_simplex_has_ten_facets():
    S = minkowski_sum(cube(3), simplex(3))
    pts = oracles.minkowski_points(cube(3).vertices, simplex(3).vertices)
    expected = brute_facet_normals(pts)
    assert set(facet_normals(S)) == expected
    assert len(expected) == 10
    assert {(0, 1, 1), (1, 0, 1), (1, 1, 0)} <= expected


def test_segment_in_plane():
    P = segment(2)
    assert P.dimension == 1
    assert P.equations == (((0, 1), 0),)
    assert len(P.facets) == 2
    with pytest.raises(GeometryError, match="full dimension"):
        facet_normals(P)


def test_point_polytope():
    P = LatticePolytope([(2, 3)])
    assert P.dimension == 0
    assert contains(P, (2, 3)) is Location.INTERIOR
    assert contains(P, (2, 4)) is Location.OUTSIDE


def test_face_of_simplex_in_diagonal_direction():
    face = face_in_direction(simplex(3), (1, 1, 1)).face
    assert face.dimension == 2
    assert len(face.vertices) == 3


def test_dilate_and_translate():
    assert dilate(simplex(2), 0) == LatticePolytope([(0, 0)])
    assert dilate(simplex(2), 3).vertices == ((0, 0), (0, 3), (3, 0))
    assert translate(cube(2), (1, -1)).vertices[0] == (1, -1)


def test_mismatched_dimensions():
    with pytest.raises(GeometryError):
        minkowski_sum(cube(2), cube(3))


@given(points3)
def test_vertices_are_extreme_generators(pts):
    P = LatticePolytope(pts)
    assert set(P.vertices) <= set(P.generators)
    for v in P.vertices:
        assert contains(P, v) is not Location.OUTSIDE
    if P.is_full_dimensional:
        normals = set(facet_normals(P))
        assert brute_facet_normals(list(P.vertices)) <= normals
        for a, b in P.facets:
            assert all(dot(a, g) <= b for g in P.generators)
            face = [v for v in P.vertices if dot(a, v) == b]
            vecs = [[Fraction(x - y) for x, y in zip(v, face[0])] for v in face[1:]]
            assert oracles._rank(vecs) == 2


@given(points2, points2)
def test_minkowski_sum_vertices(a, b):
    S = minkowski_sum(LatticePolytope(a), LatticePolytope(b))
    direct = LatticePolytope(oracles.minkowski_points(a, b))
    assert S == direct
    assert S.facets == direct.facets


@given(points2)
def test_contains_matches_simplex_cover_2d(pts):
    P = LatticePolytope(pts)
    for z in itertools.product(range(-1, 5), repeat=2):
        assert contains(P, z).value == oracles.simplex_cover_location(P.generators, z)


@given(points3)
def test_contains_matches_simplex_cover_3d(pts):
    P = LatticePolytope(pts)
    for z in oracles.bounding_box(list(P.generators)):
        assert contains(P, z).value == oracles.simplex_cover_location(P.generators, z)


@given(points3)
def test_json_round_trip(pts):
    P = LatticePolytope(pts)
    assert LatticePolytope(P.to_json()["vertices"]) == P
