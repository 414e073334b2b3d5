import random

import pytest
from hypothesis import HealthCheck, settings

from mixed_ehrhart.geometry import LatticePolytope

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_points(rng, d, n, box=3):
    return [tuple(rng.randint(0, box) for _ in range(d)) for _ in range(n)]


def random_full_polytope(rng, d, box=3):
    while True:
        P = LatticePolytope(random_points(rng, d, rng.randint(d + 1, d + 4), box))
        if P.is_full_dimensional:
            return P


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    props = dict(report.user_properties)
    if "criterion" in props:
        _acceptance.append(("PASS" if report.passed else "FAIL", props["criterion"]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for status, text in _acceptance:
        terminalreporter.write_line(f"{status}  {text}")
