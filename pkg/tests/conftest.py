import pytest

from tonal.canonical import CanonicalSize, canonical_colouring
from tonal.graph import Graph, PatternColouring


@pytest.fixture(scope="session")
def canon4():
    return canonical_colouring(CanonicalSize(4, 3))


@pytest.fixture(scope="session")
def canon21():
    return canonical_colouring(CanonicalSize(21, 15))


@pytest.fixture
def rbr_p4():
    p4 = Graph.path(4)
    return PatternColouring(p4, frozenset({(0, 1), (2, 3)}))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
