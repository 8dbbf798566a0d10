import pytest

from conftest import FIXTURES, load_dag, load_graph
from smig.graphs import cycle_graph, is_connected, path_graph
from smig.posets import marginal_independence_graph

SIZES = {
    "fig1a.txt": (6, 9),
    "fig1c.txt": (5, 7),
    "fig3a.txt": (5, 6),
    "fig4a.txt": (5, 9),
    "fig6a.txt": (8, 17),
    "path3.txt": (3, 2),
    "star4.txt": (4, 3),
    "k3.txt": (3, 3),
    "p4.txt": (4, 3),
    "c4.txt": (4, 4),
}


@pytest.mark.parametrize("name", sorted(SIZES))
def test_fixture_shapes(name):
    g = load_graph(name)
    assert (g.n, g.m) == SIZES[name]
    assert is_connected(g)


def test_every_fixture_is_listed():
    files = {p.name for p in FIXTURES.glob("*.txt")}
    assert files == set(SIZES) | {"fig1b_dag.txt"}


def test_fig1b_explains_fig1a():
    dag = load_dag("fig1b_dag.txt")
    assert dag.m == 6
    assert marginal_independence_graph(dag) == load_graph("fig1a.txt")


def test_named_fixtures_match_builders():
    assert load_graph("p4.txt") == path_graph(4)
    assert load_graph("c4.txt") == cycle_graph(4)
