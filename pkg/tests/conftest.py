import pytest

from pchrom.graphio import named_graph


@pytest.fixture(scope="session")
def tilley():
    return named_graph("tilley")


@pytest.fixture(scope="session")
def h2():
    return named_graph("h2")


@pytest.fixture(scope="session")
def gq24():
    return named_graph("gq_2_4")


@pytest.fixture(scope="session")
def petersen():
    return named_graph("petersen")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
