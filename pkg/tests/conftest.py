import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from cellulo.hecke import canonical_basis  # noqa: E402
from cellulo.rootdata import build_simple, parse_datum_selector  # noqa: E402
from cellulo.weyl import weyl_group  # noqa: E402

settings.register_profile(
    "default",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


@lru_cache(maxsize=None)
def table_for(selector: str, radius: int):
    d = parse_datum_selector(selector)
    return canonical_basis(weyl_group(d), radius)


@pytest.fixture(scope="session")
def a1():
    return weyl_group(build_simple("A1"))


@pytest.fixture(scope="session")
def a2():
    return weyl_group(build_simple("A2"))


@pytest.fixture(scope="session")
def b2():
    return weyl_group(build_simple("B2"))


@pytest.fixture(scope="session")
def g2():
    return weyl_group(build_simple("G2"))


# -- acceptance summary -------------------------------------------------------

_CRITERIA: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, text): acceptance criterion n")


def pytest_runtest_logreport(report):
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    n, text = marker
    ok = _CRITERIA.get(n, (text, True))[1] and not report.failed
    if report.when == "call" or report.failed:
        _CRITERIA[n] = (text, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    m = item.get_closest_marker("criterion")
    if m is not None:
        outcome.get_result().criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        text, ok = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
