import pytest

from annirec.graph_core import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    petersen_graph,
)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def petersen() -> Graph:
    return petersen_graph()


@pytest.fixture
def empty5() -> Graph:
    return empty_graph(5)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
