import random
from itertools import permutations

import networkx as nx
import pytest

from smig.census import (
    canonical_form,
    census_connected,
    count_faithful_to_complete,
    count_labeled_posets,
    count_smigs_height1,
    graph_classes,
    height1_poset_classes,
    render_table,
    table1,
    table2,
)
from smig.exceptions import CapacityError
from smig.graphs import UndirectedGraph, cycle_graph, path_graph, petersen_graph
from smig.oracle import labeled_graphs

# reference counts of non-isomorphic graphs on n nodes
ALL_GRAPHS = [1, 1, 2, 4, 11, 34, 156]
CONNECTED = [1, 1, 1, 2, 6, 21, 112]


def _relabel(g, perm):
    return UndirectedGraph(g.n, [(perm[a], perm[b]) for a, b in g.edges])


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def test_canonical_form_invariant_under_relabelling():
    for g in labeled_graphs(4):
        code = canonical_form(g)
        for perm in permutations(range(4)):
            assert canonical_form(_relabel(g, perm)) == code


def test_canonical_form_separates_non_isomorphic():
    rng = random.Random(3)
    sample = [g for g in labeled_graphs(5)]
    rng.shuffle(sample)
    sample = sample[:300]
    for i, g in enumerate(sample):
        for h in sample[i + 1:i + 20]:
            same = canonical_form(g) == canonical_form(h)
            assert same == nx.is_isomorphic(_nx(g), _nx(h))


def test_canonical_form_hard_cases():
    pg = petersen_graph()
    rng = random.Random(11)
    perm = list(range(10))
    rng.shuffle(perm)
    assert canonical_form(_relabel(pg, perm)) == canonical_form(pg)
    # two 3-regular graphs on 6 nodes that refinement alone cannot separate
    prism = UndirectedGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    k33 = UndirectedGraph(6, [(a, b) for a in range(3) for b in range(3, 6)])
    assert canonical_form(prism) != canonical_form(k33)
    c6 = cycle_graph(6)
    two_c3 = UndirectedGraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert canonical_form(c6) != canonical_form(two_c3)


def test_canonical_form_colours():
    p = path_graph(3)
    assert canonical_form(p, [1, 0, 0]) != canonical_form(p, [0, 1, 0])
    assert canonical_form(p, [1, 0, 0]) == canonical_form(p, [0, 0, 1])


def test_canonical_form_capacity():
    with pytest.raises(CapacityError):
        canonical_form(path_graph(11))


@pytest.mark.parametrize("n", range(0, 7))
def test_graph_class_counts(n):
    assert len(graph_classes(n)) == ALL_GRAPHS[n]
    assert len(graph_classes(n, connected=True)) == CONNECTED[n]


def test_census_rows():
    assert census_connected(2) == (1, 1, 0)
    assert census_connected(3) == (2, 2, 1)
    assert census_connected(4) == (6, 4, 1)
    assert census_connected(5) == (21, 10, 2)


def test_census_limit():
    with pytest.raises(CapacityError):
        census_connected(8)
    with pytest.raises(CapacityError):
        census_connected(9, allow_expensive=True)


def test_poset_counts():
    assert [count_labeled_posets(n) for n in range(0, 6)] == [1, 1, 3, 19, 219, 4231]
    assert [count_faithful_to_complete(n) for n in range(1, 6)] == [1, 2, 9, 76, 1095]
    with pytest.raises(CapacityError):
        count_labeled_posets(6)


def test_height_one_route():
    assert [count_smigs_height1(n) for n in range(1, 7)] == [1, 1, 2, 4, 10, 27]
    assert [count_smigs_height1(n, connected=False) for n in range(1, 6)] == [1, 2, 4, 9, 21]
    assert len(height1_poset_classes(3, connected=True)) == 2


def test_tables_and_rendering():
    assert table1(3) == [(2, 1, 1, 0), (3, 2, 2, 1)]
    assert table2(2) == [(1, 1, 1), (2, 3, 2)]
    text = render_table(("n", "count"), [(1, 4231), (2, 11117)])
    lines = text.splitlines()
    assert lines[1].endswith("4,231") and lines[2].endswith("11,117")
    assert len({len(line) for line in lines}) == 1


@pytest.mark.parametrize("n", [3, 4, 5])
def test_canonical_classes_equal_isomorphism_classes(n):
    classes = {}
    for g in labeled_graphs(n):
        classes.setdefault(canonical_form(g), []).append(g)
    assert len(classes) == ALL_GRAPHS[n]
    for members in classes.values():
        rep = _nx(members[0])
        assert all(nx.is_isomorphic(rep, _nx(h)) for h in members[1:])


def test_small_code_examples():
    assert canonical_form(path_graph(3)) == canonical_form(UndirectedGraph(3, [(0, 2), (2, 1)]))
    assert canonical_form(path_graph(4)) != canonical_form(cycle_graph(4))
    assert len({canonical_form(g) for g in graph_classes(3, connected=True)}) == 2


def test_census_monotone():
    for n in range(2, 7):
        graphs, smigs, unique = census_connected(n)
        assert unique <= smigs <= graphs
