"""Exhaustive ground truth for small graphs.

Every DAG whose arcs lie on edges of the target graph is generated (an arc
``a -> b`` makes ``a`` a common ancestor of ``a`` and ``b``, so no faithful DAG
uses a non-edge) and tested directly against the common-ancestor definition.
Nothing here calls into the enumeration module.
"""

from __future__ import annotations

from .exceptions import CapacityError
from .graphs import Dag, UndirectedGraph, bits
from .posets import Poset, reduction_from_closure

MAX_NODES = 5


def _ancestor_sets(n: int, succ) -> list[int] | None:
    """Reflexive ancestor bitsets by repeated relaxation; None on a cycle."""
    anc = [1 << v for v in range(n)]
    for _ in range(n):
        changed = False
        for a in range(n):
            for b in bits(succ[a]):
                new = anc[b] | anc[a]
                if new != anc[b]:
                    anc[b] = new
                    changed = True
        if not changed:
            break
    for v in range(n):
        for w in bits(succ[v]):
            if anc[v] >> w & 1:
                return None
    return anc


def is_faithful(u: UndirectedGraph, succ) -> bool:
    anc = _ancestor_sets(u.n, succ)
    if anc is None:
        return False
    for v in range(u.n):
        for w in range(v + 1, u.n):
            if bool(anc[v] & anc[w]) != u.has_edge(v, w):
                return False
    return True


def _dags_on_edges(u: UndirectedGraph):
    """Every acyclic choice of (absent, forward, backward) per edge of ``u``."""
    edges = u.edges
    n = u.n
    succ = [0] * n
    reach = [1 << v for v in range(n)]  # reflexive descendants

    def rec(k):
        if k == len(edges):
            yield succ
            return
        yield from rec(k + 1)
        a, b = edges[k]
        for x, y in ((a, b), (b, a)):
            if reach[y] >> x & 1:
                continue
            saved = list(reach)
            succ[x] |= 1 << y
            for z in range(n):
                if reach[z] >> x & 1:
                    reach[z] |= reach[y]
            yield from rec(k + 1)
            succ[x] &= ~(1 << y)
            reach[:] = saved

    yield from rec(0)


def _guard(u: UndirectedGraph, max_nodes: int) -> None:
    if u.n > max_nodes:
        raise CapacityError(f"brute force limited to {max_nodes} nodes, got {u.n}")


def all_faithful_dags_bruteforce(u: UndirectedGraph, max_nodes: int = MAX_NODES) -> set[Dag]:
    _guard(u, max_nodes)
    return {Dag.from_succ(s, u.labels) for s in _dags_on_edges(u) if is_faithful(u, s)}


def _closure_rows(n: int, succ) -> tuple[int, ...]:
    anc = _ancestor_sets(n, succ)
    return tuple(
        sum(1 << w for w in range(n) if w != v and anc[w] >> v & 1) for v in range(n)
    )


def faithful_closures_bruteforce(u: UndirectedGraph, max_nodes: int = MAX_NODES) -> set[tuple[int, ...]]:
    """Strict-descendant rows of every faithful poset."""
    _guard(u, max_nodes)
    return {_closure_rows(u.n, s) for s in _dags_on_edges(u) if is_faithful(u, s)}


def _as_poset(u, closure) -> Poset:
    return Poset(Dag.from_succ(reduction_from_closure(list(closure)), u.labels), check=False)


def all_faithful_posets_bruteforce(u: UndirectedGraph, max_nodes: int = MAX_NODES) -> set[Poset]:
    return {_as_poset(u, c) for c in faithful_closures_bruteforce(u, max_nodes)}


def _contained(small, big) -> bool:
    return all(s & ~b == 0 for s, b in zip(small, big))


def maximal_faithful_posets_bruteforce(u: UndirectedGraph, max_nodes: int = MAX_NODES) -> set[Poset]:
    cl = faithful_closures_bruteforce(u, max_nodes)
    return {_as_poset(u, c) for c in cl if not any(d != c and _contained(c, d) for d in cl)}


def minimal_faithful_posets_bruteforce(u: UndirectedGraph, max_nodes: int = MAX_NODES) -> set[Poset]:
    cl = faithful_closures_bruteforce(u, max_nodes)
    return {_as_poset(u, c) for c in cl if not any(d != c and _contained(d, c) for d in cl)}


def maximality_check(u: UndirectedGraph, p: Poset, max_nodes: int = MAX_NODES) -> bool:
    """True iff ``p`` is faithful and no faithful poset strictly contains it."""
    _guard(u, max_nodes)
    mine = _closure_rows(u.n, p.reduction.succ)
    if not is_faithful(u, mine):
        return False
    return not any(
        c != mine and _contained(mine, c) for c in faithful_closures_bruteforce(u, max_nodes)
    )


def faithful_dag_count_bruteforce(u: UndirectedGraph, max_nodes: int = MAX_NODES) -> int:
    _guard(u, max_nodes)
    return sum(1 for s in _dags_on_edges(u) if is_faithful(u, s))


# exhaustive suites -----------------------------------------------------------


def labeled_graphs(n: int):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for code in range(1 << len(pairs)):
        yield UndirectedGraph(n, [p for k, p in enumerate(pairs) if code >> k & 1])


def connected_labeled_graphs(n: int):
    from .graphs import is_connected

    for g in labeled_graphs(n):
        if is_connected(g):
            yield g


def check_recognition(n: int) -> list[str]:
    """Compare analytic recognition with exhaustive search on connected graphs."""
    from .recognition import is_smig

    bad = []
    for g in connected_labeled_graphs(n):
        exists = any(is_faithful(g, s) for s in _dags_on_edges(g))
        if exists != is_smig(g):
            bad.append(f"{g.edges}: oracle={exists} recognition={not exists}")
    return bad


def check_enumeration(n: int) -> list[str]:
    from .enumeration import faithful_posets, minimal_posets
    from .recognition import is_smig

    bad = []
    for g in connected_labeled_graphs(n):
        if not is_smig(g):
            continue
        got = list(faithful_posets(g))
        if len(got) != len(set(got)) or set(got) != all_faithful_posets_bruteforce(g):
            bad.append(f"{g.edges}: faithful posets differ")
        if {m.poset for m in minimal_posets(g)} != minimal_faithful_posets_bruteforce(g):
            bad.append(f"{g.edges}: minimal posets differ")
    return bad


def check_maximality(n: int) -> list[str]:
    from .enumeration import sink_orientations
    from .recognition import is_smig

    bad = []
    for g in connected_labeled_graphs(n):
        if not is_smig(g):
            continue
        if set(sink_orientations(g)) != maximal_faithful_posets_bruteforce(g):
            bad.append(f"{g.edges}: sink orientations differ from maximal posets")
    return bad
