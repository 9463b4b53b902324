import pytest

from nucalc.names import fresh_atom
from nucalc.parser import parse

# criterion number -> (passed, description); filled by test_acceptance.py
ACCEPTANCE = {}


@pytest.fixture
def names():
    """A few labelled public atoms a, b, m, n."""
    return {lab: fresh_atom(lab) for lab in "abmn"}


@pytest.fixture
def p(names):
    """Parse with the `names` fixture's atoms as free names."""
    return lambda text: parse(text, names)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {desc}")
