import sys

import pytest

from sumrank.fqlin import FqSubspace
from sumrank.gf import make_field


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 1, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def f8():
    return make_field(2, 1, 3)


@pytest.fixture(scope="session")
def f9():
    return make_field(3, 1, 2)


@pytest.fixture(scope="session")
def simplex_input(f4):
    """Singer polynomial x^2 + x + a^2 and U = <(a,1),(a^2,0),(0,a)> over F_4."""
    F = f4
    a = F.z
    a2 = F.mul(a, a)
    U = FqSubspace(F, 2, ((a, 1), (a2, 0), (0, a)))
    return F, [a2, 1, 1], U


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
