"""Built-in verification suites.

``run_paper_suite`` recomputes every reference example value;
``run_property_suite`` draws random collections and checks the identities
between the independent computation routes.  Both return a
:class:`VerificationLedger`; failures are data, never exceptions.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import config, oracles
from .ehrhart import ehrhart, hstar, hstar_from_polynomial, mixed_volume_table, multivariate_ehrhart
from .enumeration import count_points
from .geometry import LatticePolytope, contains, dilate, translate
from .io import cube, simplex
from .mixed import (
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
from .polynomial import UnivariatePolynomial, binomial_polynomial, format_rational
from .roots import asymptotic_limit, eulerian, find_min_r, scan_dilates

log = logging.getLogger(__name__)


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, UnivariatePolynomial):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


@dataclass(frozen=True)
class CheckRecord:
    check_id: str
    expected: Any
    computed: Any
    passed: bool
    citation: str
    # informational records never fail the suite
    informational: bool = False

    def to_json(self) -> dict:
        out = {
            "id": self.check_id,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "pass": self.passed,
            "citation": self.citation,
        }
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class VerificationLedger:
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, check_id: str, expected: Any, computed: Any, citation: str, passed: bool | None = None, informational: bool = False) -> CheckRecord:
        ok = (expected == computed) if passed is None else passed
        rec = CheckRecord(check_id, expected, computed, bool(ok), citation, informational)
        self.records.append(rec)
        if not rec.passed and not informational:
            log.warning("check %s failed: expected %r, computed %r", check_id, expected, computed)
        return rec

    def run(self, check_id: str, expected: Any, compute: Callable[[], Any], citation: str, passed: Callable[[Any], bool] | None = None) -> CheckRecord:
        try:
            got = compute()
        except Exception as exc:  # failures are data
            return self.add(check_id, expected, f"error: {type(exc).__name__}: {exc}", citation, passed=False)
        ok = passed(got) if passed is not None else None
        return self.add(check_id, expected, got, citation, passed=ok)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records if not r.informational)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed and not r.informational]

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checks": len(self.records),
            "failures": len(self.failures),
            "records": [r.to_json() for r in self.records],
        }


# -- paper suite ---------------------------------------------------------------


def run_paper_suite() -> VerificationLedger:
    L = VerificationLedger()
    C3 = cube(3)
    D3 = simplex(3)

    L.run("dmv-cube3-pair", 12, lambda: dmv([C3, C3]), "DMV(P,P) = 12 for P = [0,1]^3")
    L.run(
        "mixed-ehrhart-cube3-pair",
        ["0", "0", "6", "6"],
        lambda: [format_rational(x) for x in mixed_ehrhart([C3, C3]).coefficients],
        "ME_{P,P}(t) = 6t^3 + 6t^2",
    )
    L.run("hstar-cube3", (1, 4, 1, 0), lambda: hstar(C3).entries, "h*([0,1]^3) = (1,4,1,0)")
    L.run(
        "ehrhart-cube3",
        UnivariatePolynomial([1, 3, 3, 1]),
        lambda: ehrhart(C3, holdout=config.EHRHART_HOLDOUT).polynomial,
        "E_{[0,1]^d}(n) = (n+1)^d",
    )
    L.run(
        "hstar-from-cube3-polynomial",
        (1, 4, 1, 0),
        lambda: hstar_from_polynomial(UnivariatePolynomial([1, 3, 3, 1]), 3).entries,
        "h*-vector of (n+1)^3 equals (1,4,1,0)",
    )
    L.run(
        "multivariate-ehrhart-cube3",
        (1, 3, 3, 1),
        lambda: tuple(int(multivariate_ehrhart([C3]).coefficient((i,))) for i in range(4)),
        "E_{[0,1]^d}(n) = (n+1)^d",
    )
    L.run(
        "single-polytope-dmv-cube3-k2",
        12,
        lambda: single_polytope_dmv(C3, 2),
        "DMV(P,P) = sum_j C(d-j, d-k) h*_j(P) = 3*1 + 2*4 + 1*1",
    )
    L.run(
        "single-polytope-me-cube3-k2",
        UnivariatePolynomial([0, 0, 6, 6]),
        lambda: single_polytope_me(C3, 2),
        "ME_{P,P} from h*(P), consistent with the cube example",
    )
    for name, P in (("cube3", C3), ("simplex3", D3), ("2simplex3", dilate(D3, 2))):
        for k in (1, 2, 3):
            reference = mixed_ehrhart([P] * k)
            L.run(
                f"single-polytope-me-{name}-k{k}",
                reference.polynomial,
                lambda P=P, k=k: single_polytope_me(P, k),
                "ME_{P,...,P}(n) = sum_i (-1)^(k-i) C(k,i) E_P(i n)",
            )
            L.run(
                f"single-polytope-dmv-{name}-k{k}",
                reference.dmv,
                lambda P=P, k=k: single_polytope_dmv(P, k),
                "DMV(P,...,P) = sum_j C(d-j, d-k) h*_j(P)",
            )
    L.run(
        "mixed-hstar-simplex3-pair",
        (0, 3, 4, -1),
        lambda: mixed_hstar([D3, D3]).entries,
        "h*(Δ3,Δ3) = (0,3,4,-1)",
    )
    for m in range(1, 7):
        L.run(
            f"mixed-hstar-mdelta3-m{m}",
            (0, m**3 + 2 * m, 4 * m**3, m**3 - 2 * m**2),
            lambda m=m: mixed_hstar([dilate(D3, m), dilate(D3, m)]).entries,
            "h*(mΔ3,mΔ3) = (0, m^3+2m, 4m^3, m^3-2m^2)",
        )
    for d in range(1, 5):
        for k in range(1, 5):
            L.run(
                f"cube-me-d{d}-k{k}",
                cube_reference(d, k),
                lambda d=d, k=k: tuple(int(x) for x in mixed_ehrhart([cube(d)] * k).coefficients),
                "me_i = C(d,i) k! S(i,k) for k unit d-cubes",
            )
    L.run(
        "point-polytope-kills-me",
        UnivariatePolynomial(),
        lambda: mixed_ehrhart([D3, LatticePolytope([(1, 1, 1)])]).polynomial,
        "dim P_i = 0 for some i implies ME = 0",
    )
    L.run(
        "point-polytope-kills-dmv",
        0,
        lambda: dmv([C3, LatticePolytope([(0, 1, 0)])]),
        "dim P_i = 0 for some i implies ME = 0",
    )
    L.run(
        "me-second-cube3-pair",
        6,
        lambda: me_second([C3, C3]),
        "n^2 coefficient of 6t^3 + 6t^2",
    )
    L.run(
        "me-vanishing-cube3-triple",
        (0, 0, 0),
        lambda: tuple(int(x) for x in mixed_ehrhart([C3] * 3).coefficients[:3]),
        "me_i = 0 for 0 <= i < k",
    )
    L.run(
        "me-from-multivariate-cube3-pair",
        (0, 0, 6, 6),
        lambda: tuple(int(x) for x in me_from_multivariate([C3, C3])),
        "me_i = sum of e_alpha over alpha >= 1, |alpha| = i",
    )
    L.run("me-top-cube3-pair", 6, lambda: me_top([C3, C3]), "leading coefficient of 6t^3 + 6t^2")
    L.run(
        "mixed-hstar-h1-equals-dmv-simplex3-pair",
        3,
        lambda: mixed_hstar([D3, D3])[1],
        "h*_1(P_1,P_2) = DMV(P_1,P_2)",
    )
    L.run(
        "eulerian-3",
        UnivariatePolynomial([0, 1, 4, 1]),
        lambda: eulerian(3).polynomial,
        "Eulerian numbers (0,1,4,1)",
    )
    L.run(
        "scan-simplex3-pair-r1-not-positive",
        False,
        lambda: scan_dilates([D3, D3], 1)[0].positive_tail,
        "h*(Δ3,Δ3) has a negative entry",
    )
    L.run(
        "scan-simplex3-pair-r1-hstar",
        (0, 3, 4, -1),
        lambda: scan_dilates([D3, D3], 1)[0].hstar.entries,
        "h*(Δ3,Δ3) = (0,3,4,-1)",
    )
    L.run(
        "scan-simplex3-pair-r2-hstar",
        (0, 12, 32, 0),
        lambda: scan_dilates([D3, D3], 2)[1].hstar.entries,
        "h*(mΔ3,mΔ3) = (0, m^3+2m, 4m^3, m^3-2m^2) at m = 2",
    )
    L.run(
        "asymptotic-limit-cube3-pair",
        UnivariatePolynomial([0, 6, 24, 6]),
        lambda: asymptotic_limit([C3, C3]),
        "scalar equals the leading coefficient of 6t^3 + 6t^2",
    )
    L.run(
        "find-r-simplex3-pair",
        3,
        lambda: find_min_r([D3, D3], 10),
        "large dilates are positive, real-rooted, log-concave and unimodal",
    )
    return L


# -- random corpus -------------------------------------------------------------


def random_polytope(rng: random.Random, d: int, full_dimensional: bool) -> LatticePolytope:
    """Convex hull of 4-8 uniform points of ``{0..3}^d``."""
    while True:
        n = rng.randint(config.RANDOM_MIN_POINTS, config.RANDOM_MAX_POINTS)
        pts = [tuple(rng.randint(0, config.RANDOM_BOX) for _ in range(d)) for _ in range(n)]
        P = LatticePolytope(pts)
        if not full_dimensional or P.is_full_dimensional:
            return P


def random_collection(rng: random.Random, d: int, k: int, full_dimensional: bool) -> PolytopeCollection:
    return PolytopeCollection(random_polytope(rng, d, full_dimensional) for _ in range(k))


CASE_PLAN = [(d, k) for d in (1, 2, 3) for k in (1, 2, 3)]


def _random_unimodular(rng: random.Random, d: int) -> list[list[int]]:
    M = [[int(i == j) for j in range(d)] for i in range(d)]
    for _ in range(2 * d):
        i, j = rng.sample(range(d), 2) if d > 1 else (0, 0)
        if i == j:
            continue
        f = rng.choice((-1, 1))
        M[i] = [a + f * b for a, b in zip(M[i], M[j])]
    return M


def complementary_collection(rng: random.Random) -> PolytopeCollection:
    """Polytopes through the origin spanning complementary sublattices."""
    d = rng.choice((2, 3))
    k = rng.randint(2, d)
    coords = list(range(d))
    rng.shuffle(coords)
    cuts = sorted(rng.sample(range(1, d), k - 1))
    blocks = [coords[a:b] for a, b in zip([0] + cuts, cuts + [d])]
    M = _random_unimodular(rng, d)
    polys = []
    for block in blocks:
        pts = [(0,) * d]
        for _ in range(rng.randint(1, 4)):
            v = [0] * d
            for c in block:
                v[c] = rng.randint(0, 2)
            pts.append(tuple(v))
        pts = [tuple(sum(M[i][j] * p[j] for j in range(d)) for i in range(d)) for p in pts]
        polys.append(LatticePolytope(pts))
    return PolytopeCollection(polys)


def _describe(c: PolytopeCollection) -> list:
    return [list(map(list, P.vertices)) for P in c.polytopes]


def check_collection(L: VerificationLedger, tag: str, c: PolytopeCollection, rng: random.Random) -> None:
    """Run every cross-route identity that applies to ``c``."""
    verts = _describe(c)
    d, k = c.d, c.k
    full_sum = c.sum_dimension == d
    all_full = c.all_full_dimensional

    for J in c.subsets(include_empty=False):
        L.run(
            f"{tag}/ehrhart-holdout{list(J)}",
            True,
            lambda J=J: ehrhart(c.subsum(J), holdout=config.EHRHART_HOLDOUT) is not None,
            "Ehrhart interpolant matches held-out dilates",
        )

    me = mixed_ehrhart(c)
    coeffs = me.coefficients
    L.run(f"{tag}/me-multivariate", coeffs, lambda: me_from_multivariate(c), "me_i = sum e_alpha, alpha >= 1")
    L.add(f"{tag}/me-vanishing", [0] * min(k, d + 1), [int(x) for x in coeffs[: min(k, d + 1)]] if all(x.denominator == 1 for x in coeffs[:k]) else coeffs[:k], "me_i = 0 for i < k")
    direct = dmv(c)
    L.add(f"{tag}/dmv-equals-me-at-1", direct, me.dmv, "DMV = ME(1)")
    values = [me.polynomial(n) for n in range(1, 6)]
    L.add(f"{tag}/dmv-nonnegative", ">= 0", {"dmv": direct, "me(1..5)": values, "vertices": verts}, "DMV >= 0", passed=direct >= 0 and all(v >= 0 for v in values))

    if full_sum and k <= d:
        L.run(f"{tag}/me-top", coeffs[d], lambda: me_top(c), "me_d from mixed volumes")
        if k == d:
            L.run(
                f"{tag}/bernstein",
                mixed_volume_table(c.polytopes)[(1,) * k],
                lambda: bernstein_mixed_volume(c),
                "ME = d! MV n^d for k = d",
            )
    if all_full:
        L.run(f"{tag}/me-second", coeffs[d - 1], lambda: me_second(c), "me_{d-1} from facet mixed volumes")

    h = mixed_hstar(c)
    rebuilt = UnivariatePolynomial()
    for i, hi in enumerate(h.entries):
        rebuilt = rebuilt + binomial_polynomial(h.d - i, h.d) * hi
    L.add(f"{tag}/mixed-hstar-roundtrip", me.polynomial, rebuilt, "sum h*_i C(n+d-i, d) = ME(n)")
    if all_full:
        L.run(f"{tag}/mixed-hstar-direct", h.entries, lambda: mixed_hstar_direct(c).entries, "direct mixed h* formula")
        L.add(f"{tag}/mixed-hstar-h0", 0, h[0], "h*_0 = 0")
        if k == 2:
            L.add(f"{tag}/mixed-hstar-h1", direct, h[1], "h*_1(P_1,P_2) = DMV(P_1,P_2)")
        # i = 0 is excluded: h*_0 = 0 already breaks the bound for even k
        bound_ok = all(h[i] >= (-1) ** (k + i) * math.comb(h.d, i) for i in range(1, h.d + 1))
        L.add(
            f"{tag}/conjectured-lower-bound",
            "h*_i >= (-1)^(k+i) C(d,i) for i >= 1",
            {"hstar": list(h.entries), "vertices": verts},
            "open question, recorded only",
            passed=bound_ok,
            informational=True,
        )

    if k > 1:
        order = list(range(k))[::-1]
        L.run(f"{tag}/permutation", me.polynomial, lambda: mixed_ehrhart(c.permuted(order)).polynomial, "symmetric in the collection")
    shift = tuple(rng.randint(-2, 2) for _ in range(d))
    moved = PolytopeCollection([translate(c[0], shift)] + list(c.polytopes[1:]))
    L.run(f"{tag}/translation", me.polynomial, lambda: mixed_ehrhart(moved).polynomial, "translation invariant")
    if d <= 2 or k <= 2:
        L.run(f"{tag}/dilation", me.polynomial.scale_variable(2), lambda: mixed_ehrhart(c.dilate(2)).polynomial, "ME_{2P}(n) = ME_P(2n)")

    if d <= 3:
        P = c[0]
        box = oracles.bounding_box(list(P.generators))
        mismatches = [
            z for z in box
            if contains(P, z).value != oracles.simplex_cover_location(P.generators, z)
        ]
        L.add(f"{tag}/contains-oracle", [], mismatches, "facet membership agrees with simplex cover")


def run_property_suite(seed: int = 1, cases: int = 50) -> VerificationLedger:
    if cases < 1:
        raise ValueError("cases must be positive")
    rng = random.Random(seed)
    L = VerificationLedger()
    for i in range(cases):
        d, k = CASE_PLAN[i % len(CASE_PLAN)]
        c = random_collection(rng, d, k, full_dimensional=(i % 2 == 0))
        log.info("property case %d: d=%d k=%d", i, d, k)
        check_collection(L, f"case{i}", c, rng)
        if k == 1:
            P = c[0]
            L.add(f"case{i}/k1-dmv", count_points(P).total - 1, dmv(c), "DMV(P) = |P ∩ Z^d| - 1")

    pt = LatticePolytope([tuple(rng.randint(0, 3) for _ in range(3))])
    c = PolytopeCollection([random_polytope(rng, 3, True), pt])
    L.run("injected-point/dmv", 0, lambda: dmv(c), "a point in the collection kills ME")
    L.run("injected-point/me", UnivariatePolynomial(), lambda: mixed_ehrhart(c).polynomial, "a point in the collection kills ME")

    for i in range(20):
        cc = complementary_collection(rng)
        L.run(f"complementary{i}", dmv(cc), lambda: complementary_dmv_oracle(cc), "points outside every proper subsum")
    return L
