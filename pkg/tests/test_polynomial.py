from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, strategies as st

from mixed_ehrhart.polynomial import (
    MultivariatePolynomial,
    UnivariatePolynomial,
    binomial_polynomial,
    finite_difference,
    format_rational,
    from_binomial_basis,
    gcd,
    interpolate_multivariate,
    interpolate_univariate,
    multinomial,
    parse_rational,
    stirling2,
    to_binomial_basis,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
polys = st.lists(rationals, max_size=6).map(UnivariatePolynomial)


def test_zero_polynomial_has_no_degree():
    z = UnivariatePolynomial([0, 0])
    assert z.is_zero() and z.degree is None
    assert z == UnivariatePolynomial()


def test_arithmetic_and_evaluation():
    p = UnivariatePolynomial([1, 1])
    assert (p**3).coefficients == (1, 3, 3, 1)
    assert (p**3)(2) == 27
    assert p * 2 - p == p
    assert str(p**2) == "n^2 + 2*n + 1"


@given(polys, polys)
def test_division_identity(a, b):
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.divmod(b)
        return
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, polys)
def test_gcd_divides_both(a, b):
    if a.is_zero() and b.is_zero():
        return
    g = gcd(a, b)
    assert g.leading_coefficient == 1
    assert (a % g).is_zero() and (b % g).is_zero()


@given(polys, st.integers(-5, 5))
def test_scale_variable(p, r):
    assert p.scale_variable(r)(3) == p(3 * r)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=7))
def test_interpolation_recovers_values(values):
    p = interpolate_univariate(list(enumerate(values)))
    assert [p(i) for i in range(len(values))] == [Fraction(v) for v in values]
    assert p.degree is None or p.degree < len(values)


def test_interpolation_rejects_repeated_nodes():
    with pytest.raises(ValueError, match="degenerate interpolation nodes"):
        interpolate_univariate([(1, 2), (1, 3)])


def test_interpolation_of_cube_counts():
    p = interpolate_univariate([(0, 1), (1, 8), (2, 27), (3, 64)])
    assert p == UnivariatePolynomial([1, 3, 3, 1])


@given(st.lists(rationals, min_size=1, max_size=5))
def test_binomial_basis_round_trip(h):
    d = len(h) - 1
    p = from_binomial_basis(h)
    assert to_binomial_basis(p, d).entries == tuple(h)


def test_binomial_basis_of_cube():
    assert to_binomial_basis(UnivariatePolynomial([1, 3, 3, 1]), 3).entries == (1, 4, 1, 0)


def test_binomial_basis_rejects_high_degree():
    with pytest.raises(ValueError, match="degree exceeds"):
        to_binomial_basis(UnivariatePolynomial([0, 0, 1]), 1)


def test_binomial_polynomial_values():
    p = binomial_polynomial(2, 3, scale=2)
    for n in range(6):
        assert p(n) == comb(2 * n + 2, 3)


@given(st.integers(0, 8), st.integers(0, 8))
def test_stirling_via_differences(i, k):
    values = [j**i for j in range(k + 1)]
    assert finite_difference(values, k) == factorial(k) * stirling2(i, k)


def test_finite_difference_needs_values():
    with pytest.raises(ValueError):
        finite_difference([1, 2], 3)


def test_multinomial():
    assert multinomial(3, (1, 2)) == 3
    assert multinomial(4, (1, 1, 2)) == 12
    assert multinomial(3, (1, 1)) == 0


def test_multivariate_interpolation_and_diagonal():
    f = lambda a, b: (a + b + 1) ** 2 + a * b
    P = interpolate_multivariate([2, 2], f)
    for a in range(4):
        for b in range(4):
            assert P(a, b) == f(a, b)
    assert P.diagonal() == UnivariatePolynomial([1, 4, 5])
    assert P.homogeneous_part(2).coefficient((1, 1)) == 3


@given(st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), rationals, max_size=6))
def test_multivariate_json_round_trip(terms):
    P = MultivariatePolynomial(terms, 2)
    assert MultivariatePolynomial.from_json(P.to_json(), 2) == P


@given(polys)
def test_univariate_json_round_trip(p):
    assert UnivariatePolynomial.from_json(p.to_json()) == p


@given(rationals)
def test_rational_strings(x):
    assert parse_rational(format_rational(x)) == x
