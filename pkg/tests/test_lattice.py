from hypothesis import given, strategies as st

from mixed_ehrhart.lattice import (
    SublatticeFrame,
    column_reduce,
    dot,
    hermite_rows,
    integer_kernel,
    inverse_unimodular,
    primitive,
    rank,
    sign_normalized,
    xgcd,
)

small = st.integers(-6, 6)
matrices = st.integers(1, 3).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(small, small)
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert a * x + b * y == g >= 0


def test_primitive_and_sign():
    assert primitive((4, -6, 2)) == (2, -3, 1)
    assert sign_normalized((0, -2, 3)) == (0, 2, -3)


@given(matrices)
def test_column_reduce(rows):
    n = len(rows[0])
    H, U, r = column_reduce(rows, n)
    prod = [[sum(row[k] * U[k][j] for k in range(n)) for j in range(n)] for row in rows]
    assert prod == H
    assert r == rank(rows)
    Ui = inverse_unimodular(U)
    assert all(x.denominator == 1 for row in Ui for x in row)


@given(matrices)
def test_kernel_is_saturated(rows):
    n = len(rows[0])
    K = integer_kernel(rows, n)
    assert len(K) == n - rank(rows)
    for v in K:
        assert all(dot(row, v) == 0 for row in rows)
    assert hermite_rows(K) == K


@given(matrices, st.lists(small, min_size=4, max_size=4))
def test_frame_round_trip(rows, y):
    n = len(rows[0])
    F = SublatticeFrame(rows, n)
    y = y[: F.m]
    x = F.lift(y)
    assert all(dot(row, x) == 0 for row in rows)
    assert F.coordinates(x) == tuple(y)


def test_frame_of_plane():
    F = SublatticeFrame([(1, 1, 1)], 3)
    assert F.m == 2
    assert F.pull_back_functional((1, 0, 0)) == tuple(b[0] for b in F.basis)
