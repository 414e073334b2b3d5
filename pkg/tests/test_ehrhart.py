from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mixed_ehrhart import oracles
from mixed_ehrhart.ehrhart import (
    dilate_count,
    ehrhart,
    hstar,
    hstar_from_polynomial,
    mixed_volume_table,
    multivariate_ehrhart,
    volume,
)
from mixed_ehrhart.enumeration import count_points
from mixed_ehrhart.geometry import GeometryError, LatticePolytope, dilate, minkowski_sum
from mixed_ehrhart.io import cube, segment, simplex
from mixed_ehrhart.polynomial import UnivariatePolynomial

points2 = st.lists(st.tuples(*[st.integers(0, 3)] * 2), min_size=1, max_size=6)


def test_cube_ehrhart():
    E = ehrhart(cube(3), holdout=2)
    assert E.polynomial == UnivariatePolynomial([1, 3, 3, 1])
    assert hstar(cube(3)).entries == (1, 4, 1, 0)


def test_simplex_hstar_and_volume():
    assert hstar(simplex(3)).entries == (1, 0, 0, 0)
    assert volume(cube(2, 3)) == 9
    assert volume(dilate(simplex(3), 2)) == Fraction(8, 6)


def test_lower_dimensional_ehrhart():
    E = ehrhart(segment(3, 2))
    assert E.dimension == 1
    assert E.polynomial == UnivariatePolynomial([1, 2])
    assert ehrhart(LatticePolytope([(5, 5)])).polynomial == UnivariatePolynomial([1])


def test_hstar_rejects_non_ehrhart_input():
    with pytest.raises(ValueError, match="not an Ehrhart polynomial"):
        hstar_from_polynomial(UnivariatePolynomial([1, Fraction(1, 3)]), 1)


@given(points2)
def test_ehrhart_against_brute_force_dilates(pts):
    P = LatticePolytope(pts)
    E = ehrhart(P, holdout=2)
    for n in range(P.dimension + 3):
        assert E.polynomial(n) == oracles.brute_force_count(oracles.dilate_points(pts, n))[0]


@given(points2)
def test_hstar_matches_series_numerator(pts):
    P = LatticePolytope(pts)
    if not P.is_full_dimensional:
        return
    values = [dilate_count(P, n) for n in range(3)]
    assert list(hstar(P).entries) == oracles.hstar_by_series(values, 2)
    assert all(h >= 0 for h in hstar(P).entries)


def test_multivariate_ehrhart_of_pair():
    E = multivariate_ehrhart([cube(2), simplex(2)])
    for a in range(4):
        for b in range(4):
            explicit = minkowski_sum(dilate(cube(2), a), dilate(simplex(2), b))
            assert E(a, b) == count_points(explicit).total


def test_mixed_volumes_of_cube_pair():
    table = mixed_volume_table([cube(3), cube(3)])
    assert all(v == 1 for v in table.entries.values())
    assert table.weighted_sum() == 6


def test_mixed_volume_needs_full_sum():
    with pytest.raises(GeometryError):
        mixed_volume_table([segment(2), segment(2)])
