
from hypothesis import strategies as st

from cartan_horadam.cartan import CartanNumber
from cartan_horadam.exact_arith import Complex, QuadElem

small_ints = st.integers(min_value=-100, max_value=100)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


def quads(d):
    return st.builds(QuadElem, rationals, rationals, st.just(d))


def complexes(parts=rationals):
    return st.builds(Complex, parts, parts)


cartans = st.builds(CartanNumber, small_ints, small_ints, small_ints, small_ints)
rational_cartans = st.builds(CartanNumber, rationals, rationals, rationals, rationals)


# Acceptance criteria report one line each at the end of the run.
_ACCEPTANCE = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _ACCEPTANCE.items():
        name = nodeid.split("::")[-1]
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
