from hypothesis import given, strategies as st

from mixed_ehrhart import oracles
from mixed_ehrhart.enumeration import count_points, count_weighted_sum, enumerate_points
from mixed_ehrhart.geometry import LatticePolytope, dilate, minkowski_sum
from mixed_ehrhart.io import cube, segment, simplex

points2 = st.lists(st.tuples(*[st.integers(0, 3)] * 2), min_size=1, max_size=6)
points3 = st.lists(st.tuples(*[st.integers(0, 2)] * 3), min_size=1, max_size=6)


def test_known_counts():
    assert count_points(cube(3, 2)).to_json() == {"total": 27, "interior": 1}
    assert count_points(dilate(simplex(2), 2)).total == 6
    assert count_points(dilate(simplex(3), 2)).to_json() == {"total": 10, "interior": 0}
    assert count_points(segment(2, 3)).to_json() == {"total": 4, "interior": 2}
    assert count_points(LatticePolytope([(1, 1, 1)])).to_json() == {"total": 1, "interior": 1}


def test_lower_dimensional_counts_are_relative():
    tri = LatticePolytope([(0, 0, 0), (3, 0, 0), (0, 3, 0)])
    assert count_points(tri).to_json() == {"total": 10, "interior": 1}
    skew = LatticePolytope([(0, 0, 0), (2, 2, 2)])
    assert count_points(skew).to_json() == {"total": 3, "interior": 1}


@given(points2)
def test_count_matches_brute_force_2d(pts):
    assert tuple(count_points(LatticePolytope(pts)).to_json().values()) == tuple(
        dict(zip(("total", "interior"), oracles.brute_force_count(pts))).values()
    )


@given(points3)
def test_count_matches_brute_force_3d(pts):
    c = count_points(LatticePolytope(pts))
    assert (c.total, c.interior) == oracles.brute_force_count(pts)


@given(points2, points2, st.integers(0, 3), st.integers(0, 3))
def test_weighted_sum_matches_explicit_sum(a, b, n1, n2):
    P, Q = LatticePolytope(a), LatticePolytope(b)
    explicit = minkowski_sum(dilate(P, n1), dilate(Q, n2))
    assert count_weighted_sum([P, Q], [n1, n2]) == count_points(explicit)


@given(points2)
def test_enumerated_points_are_sorted_and_counted(pts):
    P = LatticePolytope(pts)
    listed = enumerate_points(P)
    assert listed == sorted(listed)
    assert len(listed) == count_points(P).total
