"""Compare the compiled and pure-Python lattice-point kernels.

Run with ``python3 benchmarks/bench_kernels.py``.  Each row counts the
lattice points of a dilated polytope through both backends, checks that the
counts agree and reports the best of several timings.
"""

import argparse
import timeit

from mixed_ehrhart import kernels
from mixed_ehrhart.enumeration import weighted_sum_system
from mixed_ehrhart.io import cube, simplex
from mixed_ehrhart.geometry import LatticePolytope

CASES = [
    ("cube3 x60", [cube(3)], [60]),
    ("simplex3 x150", [simplex(3)], [150]),
    ("cube3 + simplex3 x50", [cube(3), simplex(3)], [50, 50]),
    ("skew tetrahedron x40", [LatticePolytope([(0, 0, 0), (3, 1, 0), (1, 3, 1), (2, 2, 3)])], [40]),
    ("cube4 x20", [cube(4)], [20]),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    if kernels.backend() != "compiled":
        print("compiled kernel unavailable; only the Python timings are shown")
    print(f"{'case':<24}{'points':>12}{'python ms':>12}{'compiled ms':>13}{'speed-up':>10}")
    for name, polys, weights in CASES:
        S = weighted_sum_system(polys, weights)
        call = (S.A, S.b, S.lo, S.hi)
        py = kernels.python_count_box(*call)
        t_py = min(timeit.repeat(lambda: kernels.python_count_box(*call), number=1, repeat=args.repeat))
        if kernels.backend() == "compiled":
            c = kernels.compiled_count_box(*call)
            assert c == py, (name, c, py)
            t_c = min(timeit.repeat(lambda: kernels.compiled_count_box(*call), number=1, repeat=args.repeat))
            print(f"{name:<24}{py[0]:>12}{1e3 * t_py:>12.2f}{1e3 * t_c:>13.3f}{t_py / t_c:>9.1f}x")
        else:
            print(f"{name:<24}{py[0]:>12}{1e3 * t_py:>12.2f}{'-':>13}{'-':>10}")


if __name__ == "__main__":
    main()
