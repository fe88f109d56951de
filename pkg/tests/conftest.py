import pytest

from randic_energy.graph import Graph, path_graph


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


def all_graphs(max_n):
    """Every labelled graph on 0..max_n vertices."""
    from randic_energy.oracles import enumerate_labeled
    for n in range(max_n + 1):
        yield from enumerate_labeled(n)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
