import pytest

from conftest import named_arcs
from smig.exceptions import NotSMIGError
from smig.graphs import UndirectedGraph, complete_graph, cycle_graph, path_graph, star_graph
from smig.oracle import connected_labeled_graphs, faithful_dag_count_bruteforce, labeled_graphs
from smig.posets import marginal_independence_graph
from smig.recognition import (
    boundary_classes,
    embed_as_induced_smig,
    has_unique_faithful_dag,
    is_smig,
    is_trivially_perfect,
    is_trivially_perfect_by_central_points,
    sink_arcs,
    sink_graph,
    smig_witness,
    trivially_perfect_witness,
)


def test_smig_examples(fig1a, fig1c):
    assert is_smig(fig1a) and smig_witness(fig1a) is None
    assert not is_smig(fig1c)
    a, b = smig_witness(fig1c)
    assert {fig1c.label(a), fig1c.label(b)} == {"a2", "b2"}
    for n in range(1, 7):
        assert is_smig(complete_graph(n))
    assert not is_smig(cycle_graph(4))


def test_witness_edge_lies_in_no_simplex():
    from smig.graphs import simplex_masks

    for g in labeled_graphs(5):
        w = smig_witness(g)
        if w is None:
            continue
        a, b = w
        assert g.has_edge(a, b)
        assert not any(s >> a & 1 and s >> b & 1 for s, _ in simplex_masks(g))


def test_trivially_perfect_examples(fig1a):
    p4 = path_graph(4)
    nodes, kind = trivially_perfect_witness(p4)
    assert kind == "P4" and set(nodes) == {0, 1, 2, 3}
    assert all(p4.has_edge(nodes[k], nodes[k + 1]) for k in range(3))
    nodes, kind = trivially_perfect_witness(cycle_graph(4))
    assert kind == "C4"
    assert is_trivially_perfect(star_graph(3))
    assert not is_trivially_perfect(fig1a)


def test_trivially_perfect_methods_agree_and_imply_smig():
    for n in range(1, 7):
        for g in labeled_graphs(n):
            tp = is_trivially_perfect(g)
            assert tp == is_trivially_perfect_by_central_points(g)
            if tp:
                assert is_smig(g)


def test_sink_graph_fig1a_matches_fig1b(fig1a):
    sg = sink_graph(fig1a)
    assert not sg.undirected
    expected = {("a1", "b1"), ("a1", "a2"), ("a3", "a2"), ("a3", "b2"), ("c1", "b2"), ("c1", "b1")}
    assert named_arcs(fig1a, sg.directed) == expected


def test_sink_graph_small(k3, path3):
    sg = sink_graph(k3)
    assert not sg.directed and len(sg.undirected) == 3
    sg = sink_graph(path3)
    assert named_arcs(path3, sg.directed) == {("x", "c"), ("y", "c")}
    assert not sg.undirected


def test_sink_graph_rejects_non_smig(fig1c):
    with pytest.raises(NotSMIGError) as info:
        sink_graph(fig1c)
    assert info.value.witness == smig_witness(fig1c)


def test_sink_graph_skeleton_and_acyclicity():
    from smig.graphs import Dag

    for n in range(1, 6):
        for g in connected_labeled_graphs(n):
            if not is_smig(g):
                continue
            directed, undirected = sink_arcs(g)
            Dag(n, directed)  # raises on a cycle
            covered = {tuple(sorted(a)) for a in directed} | {tuple(sorted(e)) for e in undirected}
            bd = [r | 1 << v for v, r in enumerate(g.adj)]
            comparable = {(a, b) for a, b in g.edges if bd[a] & ~bd[b] == 0 or bd[b] & ~bd[a] == 0}
            assert covered == comparable
            for cls in boundary_classes(g):
                bds = {g.adj[v] | 1 << v for v in cls}
                assert len(bds) == 1


def test_unique_examples(path3, k3):
    assert has_unique_faithful_dag(path3)
    for k in range(2, 6):
        assert has_unique_faithful_dag(star_graph(k))
    assert not has_unique_faithful_dag(k3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_unique_matches_oracle(n):
    for g in connected_labeled_graphs(n):
        if is_smig(g):
            assert has_unique_faithful_dag(g) == (faithful_dag_count_bruteforce(g) == 1)


def test_unique_rejects_non_smig(fig1c):
    with pytest.raises(NotSMIGError):
        has_unique_faithful_dag(fig1c)


def test_embed_examples(k3, fig1c):
    big, dag = embed_as_induced_smig(k3)
    assert (big.n, big.m, dag.m) == (6, 9, 6)
    assert marginal_independence_graph(dag) == big
    big, dag = embed_as_induced_smig(UndirectedGraph(2, [(0, 1)]))
    assert big == complete_graph(3) and set(dag.arcs) == {(2, 0), (2, 1)}
    big, dag = embed_as_induced_smig(fig1c)
    assert big.n == 12 and is_smig(big)
    assert marginal_independence_graph(dag) == big
    assert big.induced_subgraph(range(5)) == fig1c
