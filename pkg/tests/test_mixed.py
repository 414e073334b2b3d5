import random
from math import comb, factorial

import pytest

from mixed_ehrhart import oracles
from mixed_ehrhart.geometry import LatticePolytope, dilate
from mixed_ehrhart.io import cube, segment, simplex
from mixed_ehrhart.mixed import (
    HypothesisError,
    PolytopeCollection,
    bernstein_mixed_volume,
    complementary_dmv_oracle,
    cube_reference,
    dmv,
    me_from_multivariate,
    me_second,
    me_top,
    mixed_ehrhart,
    mixed_hstar,
    mixed_hstar_direct,
    single_polytope_dmv,
    single_polytope_me,
)
from mixed_ehrhart.polynomial import UnivariatePolynomial, stirling2
from mixed_ehrhart.suites import complementary_collection

from conftest import random_full_polytope, random_points


def test_cube_pair():
    res = mixed_ehrhart([cube(3), cube(3)])
    assert res.polynomial == UnivariatePolynomial([0, 0, 6, 6])
    assert res.dmv == dmv([cube(3), cube(3)]) == 12
    assert me_top([cube(3), cube(3)]) == 6
    assert me_second([cube(3), cube(3)]) == 6


def test_simplex_pair_hstar():
    assert mixed_hstar([simplex(3), simplex(3)]).entries == (0, 3, 4, -1)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_dilated_simplex_pair_hstar(m):
    # h*_1 = DMV and the entries sum to d! * me_d = 6 m^3
    h = mixed_hstar([dilate(simplex(3), m)] * 2).entries
    # |m Δ3 ∩ Z^3| = C(m+3, 3)
    assert h[1] == comb(2 * m + 3, 3) - 2 * comb(m + 3, 3) + 1
    assert sum(h) == 6 * m**3
    me = [comb(2 * m * n + 3, 3) - 2 * comb(m * n + 3, 3) + 1 for n in range(4)]
    assert list(h) == oracles.hstar_by_series(me, 3)
    assert h == (0, m**3 + 2 * m**2, 4 * m**3, m**3 - 2 * m**2)


@pytest.mark.parametrize("d,k", [(d, k) for d in range(1, 5) for k in range(1, 5)])
def test_cube_reference(d, k):
    me = mixed_ehrhart([cube(d)] * k).coefficients
    assert tuple(me) == cube_reference(d, k)
    assert all(me[i] == comb(d, i) * factorial(k) * stirling2(i, k) for i in range(d + 1))


def test_point_kills_everything():
    c = [simplex(3), LatticePolytope([(1, 2, 3)])]
    assert dmv(c) == 0
    assert mixed_ehrhart(c).polynomial.is_zero()


def test_dmv_against_brute_force(rng):
    for _ in range(6):
        a = random_points(rng, 2, rng.randint(1, 4))
        b = random_points(rng, 2, rng.randint(1, 4))
        assert dmv([LatticePolytope(a), LatticePolytope(b)]) == oracles.brute_force_dmv([a, b])


def test_single_polytope_formulas():
    for P in (cube(3), simplex(3), dilate(simplex(3), 2)):
        for k in (1, 2, 3):
            ref = mixed_ehrhart([P] * k)
            assert single_polytope_me(P, k) == ref.polynomial
            assert single_polytope_dmv(P, k) == ref.dmv


def test_direct_hstar_formula(rng):
    for d in (2, 3):
        c = [random_full_polytope(rng, d) for _ in range(2)]
        assert mixed_hstar_direct(c) == mixed_hstar(c)


def test_multivariate_route(rng):
    c = [random_full_polytope(rng, 2) for _ in range(3)]
    assert me_from_multivariate(c) == mixed_ehrhart(c).coefficients


def test_bernstein():
    c = [cube(2), simplex(2)]
    # area of the pentagon square + triangle is 1 + 1/2 + 2 MV = 7/2
    assert bernstein_mixed_volume(c) == 1
    assert mixed_ehrhart(c).polynomial == UnivariatePolynomial([0, 0, 2])
    with pytest.raises(HypothesisError):
        bernstein_mixed_volume([cube(2)])


def test_second_coefficient_needs_full_dimension():
    with pytest.raises(HypothesisError, match="full-dimensional"):
        me_second([segment(2), cube(2)])


def test_complementary_oracle():
    rng = random.Random(5)
    for _ in range(10):
        c = complementary_collection(rng)
        assert complementary_dmv_oracle(c) == dmv(c)
    with pytest.raises(HypothesisError):
        complementary_dmv_oracle([cube(2), cube(2)])


def test_collection_subsets():
    c = PolytopeCollection([cube(2)] * 3)
    assert c.subsets()[:4] == [(), (0,), (1,), (2,)]
    assert c.sign(()) == -1 and c.sign((0, 1, 2)) == 1
