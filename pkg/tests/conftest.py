from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qhilbert import FieldContext, FieldElement, QuantumParam, ThetaParam, quantum_param_from_theta

# Parameter grid shared by the identity tests: two real rational s, three theta-forms.
GRID_PARAMS = {
    "s=1/2": QuantumParam.from_rational("1/2"),
    "s=2/3": QuantumParam.from_rational("2/3"),
    "m=1": quantum_param_from_theta(ThetaParam(1)),
    "m=2": quantum_param_from_theta(ThetaParam(2)),
    "m=3": quantum_param_from_theta(ThetaParam(3)),
}


small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=9),
)


def field_elements(d=5):
    ctx = FieldContext(d)
    return st.builds(lambda a, b, c, e: FieldElement(ctx, a, b, c, e),
                     small_fractions, small_fractions, small_fractions, small_fractions)


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion."""
    def record(number, title, ok, detail=""):
        _ACCEPTANCE.append((number, title, ok, detail))
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(_ACCEPTANCE):
        status = "PASS" if ok else "FAIL"
        tail = f" - {detail}" if detail else ""
        terminalreporter.write_line(f"[{status}] criterion {number:>2}: {title}{tail}")
