import pytest

from statesum.groups import cyclic, symmetric3
from statesum.hopf import group_algebra


@pytest.fixture(scope="session")
def small_algebras():
    """Q[Z/2], Q[Z/3], Q[S3] and their duals."""
    base = [group_algebra(cyclic(2)), group_algebra(cyclic(3)), group_algebra(symmetric3())]
    return base + [H.dual() for H in base]


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
