import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from mixed_ehrhart import kernels
from mixed_ehrhart.enumeration import polytope_system
from mixed_ehrhart.io import cube

compiled = pytest.mark.skipif(kernels.backend() != "compiled", reason="extension not built")


def test_small_box():
    A = [[1, 0], [-1, 0], [0, 1], [0, -1]]
    b = [2, 0, 2, 0]
    assert kernels.python_count_box(A, b, [0, 0], [2, 2]) == (9, 1)


def test_empty_system_counts_one_point():
    assert kernels.python_count_box([], [], [], []) == (1, 1)


@compiled
def test_compiled_small_box():
    A = [[1, 0], [-1, 0], [0, 1], [0, -1]]
    assert kernels.compiled_count_box(A, [2, 0, 2, 0], [0, 0], [2, 2]) == (9, 1)


systems = st.integers(1, 3).flatmap(
    lambda m: st.tuples(
        st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=1, max_size=5),
        st.lists(st.integers(-2, 8), min_size=5, max_size=5),
        st.lists(st.integers(-3, 0), min_size=m, max_size=m),
        st.lists(st.integers(0, 3), min_size=m, max_size=m),
    )
)


@compiled
@given(systems)
def test_backends_agree(system):
    A, b, lo, hi = system
    b = b[: len(A)]
    assert kernels.compiled_count_box(A, b, lo, hi) == kernels.python_count_box(A, b, lo, hi)


@given(systems)
def test_enumeration_agrees_with_count(system):
    A, b, lo, hi = system
    b = b[: len(A)]
    total, _ = kernels.python_count_box(A, b, lo, hi)
    assert len(kernels.enumerate_box(A, b, lo, hi)) == total


def test_huge_coefficients_fall_back_to_python():
    big = 1 << 70
    assert not kernels.fits_int64([[big]], [big], [0], [1])
    assert kernels.count_box([[big]], [big], [0], [1]) == (2, 1)


def test_pure_switch():
    env = dict(os.environ, MIXED_EHRHART_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from mixed_ehrhart import backend; print(backend())"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


def test_cube_system_shape():
    S = polytope_system(cube(3, 2))
    assert len(S.lo) == 3
