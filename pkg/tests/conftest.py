from pathlib import Path

import pytest

from smig.io import parse_dag, parse_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_graph(name):
    return parse_graph((FIXTURES / name).read_text())


def load_dag(name):
    return parse_dag((FIXTURES / name).read_text())


def names(g, nodes):
    return {g.label(v) for v in nodes}


def named_arcs(g, arcs):
    return {(g.label(a), g.label(b)) for a, b in arcs}


@pytest.fixture
def fig1a():
    return load_graph("fig1a.txt")


@pytest.fixture
def fig1c():
    return load_graph("fig1c.txt")


@pytest.fixture
def fig3a():
    return load_graph("fig3a.txt")


@pytest.fixture
def fig4a():
    return load_graph("fig4a.txt")


@pytest.fixture
def fig6a():
    return load_graph("fig6a.txt")


@pytest.fixture
def fig1b():
    return load_dag("fig1b_dag.txt")


@pytest.fixture
def path3():
    return load_graph("path3.txt")


@pytest.fixture
def k3():
    return load_graph("k3.txt")


# acceptance reporting

ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption("--stretch", action="store_true", help="run the optional large-instance acceptance checks")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
