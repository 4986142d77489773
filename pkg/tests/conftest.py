from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from dixit.polynomial import Polynomial
from dixit.quantity import Quantity

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


# strategies -------------------------------------------------------------------

fractions = st.builds(
    Fraction, st.integers(-60, 60), st.integers(1, 12)
)
quantities = fractions.map(Quantity)
nonzero_quantities = quantities.filter(bool)


@st.composite
def polynomials(draw, max_degree: int = 8, min_terms: int = 0, max_terms: int = 6):
    degrees = draw(st.sets(st.integers(0, max_degree), min_size=min_terms, max_size=max_terms))
    return Polynomial({d: draw(nonzero_quantities) for d in degrees})


# acceptance reporting ---------------------------------------------------------

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "criterion(number, title): acceptance criterion this test belongs to"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "ok": True, "tests": 0})
    if report.when == "call":
        entry["tests"] += 1
    if report.failed:
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        status = "PASS" if entry["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {entry['title']}")
