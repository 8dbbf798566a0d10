"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Criterion 9 (large census rows) runs only with ``--stretch`` or
``SMIG_STRETCH=1``.
"""

import io
import os
import random
import time

import pytest

import conftest
from conftest import FIXTURES, load_graph, named_arcs
from smig.census import census_connected, count_faithful_to_complete, count_labeled_posets
from smig.cli import run
from smig.enumeration import tree_poset
from smig.exceptions import GraphInputError, NotTriviallyPerfectError
from smig.graphs import UndirectedGraph, cycle_graph, is_connected, path_graph
from smig.latent import dag_from_cover, edge_clique_cover, hardness_gadget, min_auxiliary_bruteforce
from smig.oracle import (
    check_enumeration,
    check_maximality,
    connected_labeled_graphs,
    faithful_dag_count_bruteforce,
    labeled_graphs,
)
from smig.posets import marginal_independence_graph
from smig.recognition import has_unique_faithful_dag, is_smig, is_trivially_perfect

FIG6B = [
    "v1>v5 v1>v6 v1>v7 v1>v8 v2>v5 v2>v8 v3>v6 v3>v7 v3>v8 v4>v6 v4>v7",
    "v1>v5 v1>v6 v1>v7 v2>v5 v3>v6 v3>v7 v3>v8 v4>v6 v4>v7 v5>v8",
    "v1>v5 v1>v6 v2>v5 v3>v6 v3>v8 v4>v6 v5>v8 v6>v7",
    "v1>v5 v1>v7 v2>v5 v3>v7 v3>v8 v4>v7 v5>v8 v7>v6",
    "v1>v5 v1>v6 v1>v8 v2>v5 v2>v8 v3>v6 v3>v8 v4>v6 v6>v7",
    "v1>v5 v1>v7 v1>v8 v2>v5 v2>v8 v3>v7 v3>v8 v4>v7 v7>v6",
]
TABLE1 = {2: (1, 1, 0), 3: (2, 2, 1), 4: (6, 4, 1), 5: (21, 10, 2), 6: (112, 27, 4), 7: (853, 88, 10)}
POSETS = [1, 3, 19, 219, 4231]
FAITHFUL_COMPLETE = [1, 2, 9, 76, 1095]


def report(number, title, ok, elapsed, limit, detail=""):
    within = elapsed <= limit
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {number}: {status}  {title}  [{elapsed:.1f}s, limit {limit:g}s]"
    if detail:
        line += f"  {detail}"
    if not within:
        line += "  (over time limit)"
    print(line)
    conftest.ACCEPTANCE_LINES.append(line)
    assert ok, detail or title
    assert within, f"took {elapsed:.1f}s, limit {limit}s"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue()


def _timed(fn):
    t = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t


def test_criterion_1_fixture_graphs():
    problems = []
    slowest = 0.0

    (code, out), dt = _timed(lambda: cli("recognize", FIXTURES / "fig1a.txt"))
    slowest = max(slowest, dt)
    if code != 0 or out.count("simplex ") != 3:
        problems.append("fig1a not accepted")

    (code, out), dt = _timed(lambda: cli("recognize", FIXTURES / "fig1c.txt"))
    slowest = max(slowest, dt)
    if code != 1 or "a2 b2" not in out:
        problems.append("fig1c not rejected with witness a2-b2")

    (code, out), dt = _timed(lambda: cli("enumerate", "--mode", "posets", FIXTURES / "fig6a.txt"))
    slowest = max(slowest, dt)
    from smig.io import parse_poset

    g6 = load_graph("fig6a.txt")
    got = [frozenset(named_arcs(g6, parse_poset(b).arcs)) for b in out.strip().split("\n\n")]
    want = {frozenset(tuple(a.split(">")) for a in s.split()) for s in FIG6B}
    if code != 0 or len(got) != 6 or set(got) != want:
        problems.append(f"fig6a gave {len(got)} posets, match={set(got) == want}")

    (code, out), dt = _timed(lambda: cli("enumerate", "--mode", "minimal", FIXTURES / "fig3a.txt"))
    slowest = max(slowest, dt)
    g3 = load_graph("fig3a.txt")
    blocks = out.strip().split("\n\n")
    fig3b = {("a", "b"), ("d", "b"), ("d", "c"), ("e", "b"), ("e", "c")}
    if code != 0 or len(blocks) != 1 or named_arcs(g3, parse_poset(blocks[0]).arcs) != fig3b:
        problems.append("fig3a minimal poset differs from the 5-arc poset")

    report(1, "fixture graphs", not problems, slowest, 1.0, "; ".join(problems))


def test_criterion_2_oracle_equivalence():
    def body():
        bad = []
        for n in range(1, 6):
            bad += check_enumeration(n) + check_maximality(n)
        return bad

    bad, dt = _timed(body)
    report(2, "enumerator equals brute force on connected SMIGs, n <= 5", not bad, dt, 600, "; ".join(bad[:3]))


def test_criterion_3_table1():
    def body():
        return {n: census_connected(n) for n in range(2, 8)}

    got, dt = _timed(body)
    diff = {n: got[n] for n in got if got[n] != TABLE1[n]}
    report(3, "connected graphs / SMIGs / unique-DAG counts, n = 2..7", not diff, dt, 900, f"mismatch {diff}" if diff else "")


def test_criterion_4_table2():
    def body():
        return [count_labeled_posets(n) for n in range(1, 6)], [count_faithful_to_complete(n) for n in range(1, 6)]

    (posets, complete), dt = _timed(body)
    closed = [n * count_labeled_posets(n - 1) for n in range(1, 6)]
    ok = posets == POSETS and complete == FAITHFUL_COMPLETE and complete == closed
    report(4, "labelled posets and posets faithful to complete graphs, n = 1..5", ok, dt, 300, "" if ok else f"{posets} {complete}")


def test_criterion_5_unique_dag():
    def body():
        bad = []
        for n in range(1, 6):
            for g in connected_labeled_graphs(n):
                if is_smig(g) and has_unique_faithful_dag(g) != (faithful_dag_count_bruteforce(g) == 1):
                    bad.append(str(g.edges))
        if not has_unique_faithful_dag(load_graph("path3.txt")):
            bad.append("path")
        if not has_unique_faithful_dag(load_graph("star4.txt")):
            bad.append("star")
        if has_unique_faithful_dag(load_graph("k3.txt")):
            bad.append("K3")
        return bad

    bad, dt = _timed(body)
    report(5, "unique faithful DAG detection", not bad, dt, 600, "; ".join(bad[:3]))


def test_criterion_6_latent_reduction():
    def body():
        bad = []
        for n in range(1, 5):
            for g in labeled_graphs(n):
                cover = len(edge_clique_cover(g))
                aug = min_auxiliary_bruteforce(hardness_gadget(g), cover)
                if aug is None or len(aug.auxiliary) != cover:
                    bad.append(f"{g.edges}: cover {cover}, auxiliary {None if aug is None else len(aug.auxiliary)}")
        return bad

    bad, dt = _timed(body)
    report(6, "min clique cover equals min auxiliary count of the gadget, n <= 4", not bad, dt, 600, "; ".join(bad[:3]))


def test_criterion_7_construction_validity():
    def body():
        rng = random.Random(20240607)
        failures = 0
        for _ in range(1000):
            n = rng.randint(1, 8)
            p = rng.random()
            g = UndirectedGraph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])
            for mode in ("exact", "greedy"):
                try:
                    aug = dag_from_cover(g, edge_clique_cover(g, mode))
                except AssertionError:
                    failures += 1
                    continue
                if not aug.is_faithful_to(g):
                    failures += 1
        return failures

    failures, dt = _timed(body)
    report(7, "cover construction faithful on 1000 random graphs, n <= 8", failures == 0, dt, 600, f"{failures} failures" if failures else "")


def test_criterion_8_tree_posets():
    def body():
        bad = []
        for n in range(1, 7):
            for g in labeled_graphs(n):
                expect = is_connected(g) and is_trivially_perfect(g)
                try:
                    p = tree_poset(g)
                except (NotTriviallyPerfectError, GraphInputError):
                    p = None
                if (p is not None) != expect:
                    bad.append(f"{g.edges}: expected success={expect}")
                elif p is not None and (p.reduction.m != n - 1 or marginal_independence_graph(p.reduction) != g):
                    bad.append(f"{g.edges}: wrong tree")
        for g, kind in ((path_graph(4), "P4"), (cycle_graph(4), "C4")):
            try:
                tree_poset(g)
                bad.append(f"{kind} accepted")
            except NotTriviallyPerfectError as exc:
                if exc.kind != kind or len(exc.witness) != 4:
                    bad.append(f"{kind} witness {exc.kind} {exc.witness}")
        return bad

    bad, dt = _timed(body)
    report(8, "tree posets exactly on connected trivially perfect graphs, n <= 6", not bad, dt, 600, "; ".join(bad[:3]))


def _stretch_enabled(config):
    return config.getoption("--stretch") or os.environ.get("SMIG_STRETCH") == "1"


@pytest.mark.slow
def test_criterion_9_stretch(request):
    if not _stretch_enabled(request.config):
        line = "criterion 9: SKIP  large census rows (enable with --stretch or SMIG_STRETCH=1)"
        print(line)
        conftest.ACCEPTANCE_LINES.append(line)
        pytest.skip("stretch checks disabled")

    def body():
        return census_connected(8, allow_expensive=True), count_labeled_posets(6, allow_expensive=True)

    (row8, p6), dt = _timed(body)
    ok = row8 == (11117, 328, 27) and p6 == 130023
    report(9, "census n = 8 and labelled posets n = 6", ok, dt, 3600, f"got {row8}, {p6}")

