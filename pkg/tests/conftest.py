import pytest
from hypothesis import strategies as st

from tautoproof.formula import Atom, Not, Or, parse

PAPER_FORMULA_TEXT = "!(L|M)|M|L"

letters_st = st.sampled_from(["L", "M", "N"])
formulas = st.recursive(
    letters_st.map(Atom),
    lambda inner: st.one_of(inner.map(Not), st.tuples(inner, inner).map(lambda p: Or(*p))),
    max_leaves=8,
)


@pytest.fixture
def paper_formula():
    return parse(PAPER_FORMULA_TEXT)


@pytest.fixture
def L():
    return Atom("L")


@pytest.fixture
def M():
    return Atom("M")


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance exit criterion")


def pytest_runtest_logreport(report):
    marker = getattr(report, "_criterion", None)
    if marker is None:
        return
    if report.when == "call" or report.outcome != "passed":
        previous = _criteria.get(marker, "passed")
        _criteria[marker] = "failed" if "failed" in (previous, report.outcome) else report.outcome


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result()._criterion = marker.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), outcome in sorted(_criteria.items()):
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
