"""Enumeration of posets and DAGs faithful to a graph.

All faithful posets are generated from a choice of one simplicial node per
simplex (the *selection*) plus a poset on the remaining nodes that fits inside
the sink graph. The inner enumeration is a reverse search over atransitive arc
sets: a child adds one arc whose pair index exceeds that of the last added arc,
so every subset is reached once and every recursion node yields exactly one
output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterator

from .exceptions import GraphInputError, NotTriviallyPerfectError
from .graphs import Dag, UndirectedGraph, bits, simplex_masks
from .posets import Poset, mig_rows
from .recognition import boundary_classes, require_smig, sink_arcs, trivially_perfect_witness


@dataclass
class EnumerationStats:
    emitted: int = 0
    duplicates: int = 0
    nodes: int = 0


@dataclass(frozen=True)
class MinimalPoset:
    poset: Poset
    selection: tuple[int, ...]


@dataclass(frozen=True)
class DagPattern:
    """Base DAG plus optional arcs; every completion is a faithful DAG.

    ``optional`` arcs leave the selected simplicial nodes and are implied by the
    base through another selected-node arc followed by a path in the base.
    """

    base: Dag
    optional: tuple[tuple[int, int], ...]
    selection: tuple[int, ...]
    inner: tuple[tuple[int, int], ...] = field(default=())

    @property
    def mandatory(self) -> list[tuple[int, int]]:
        sel = set(self.selection)
        return [a for a in self.base.arcs if a[0] in sel]

    def __len__(self) -> int:
        return 1 << len(self.optional)

    def completions(self) -> Iterator[Dag]:
        for choice in range(1 << len(self.optional)):
            succ = list(self.base.succ)
            for k, (i, j) in enumerate(self.optional):
                if choice >> k & 1:
                    succ[i] |= 1 << j
            yield Dag.from_succ(succ, self.base.labels)


def selections(u: UndirectedGraph) -> Iterator[tuple[int, ...]]:
    """Every choice of one simplicial node per simplex."""
    pairs = simplex_masks(u)
    yield from product(*(list(bits(t)) for _, t in pairs))


def _minimal_rows(u: UndirectedGraph, selection) -> list[int]:
    rows = [0] * u.n
    for i in selection:
        rows[i] = u.adj[i]
    return rows


def minimal_posets(u: UndirectedGraph) -> Iterator[MinimalPoset]:
    """Height-one posets sending one simplicial node per simplex to its neighbours."""
    require_smig(u)
    for sel in selections(u):
        dag = Dag.from_succ(_minimal_rows(u, sel), u.labels)
        yield MinimalPoset(Poset(dag, check=False), sel)


def sink_orientations(u: UndirectedGraph) -> Iterator[Poset]:
    """Maximal faithful posets: linear orders on each class of equal boundaries."""
    require_smig(u)
    directed, _ = sink_arcs(u)
    base = [0] * u.n
    for a, b in directed:
        base[a] |= 1 << b
    classes = [sorted(c) for c in boundary_classes(u) if len(c) > 1]
    for orders in product(*(permutations(c) for c in classes)):
        succ = list(base)
        for order in orders:
            for k, a in enumerate(order):
                for b in order[k + 1:]:
                    succ[a] |= 1 << b
        closure = Dag.from_succ(succ, u.labels)
        yield Poset.from_dag(closure)


def _inner_candidates(u: UndirectedGraph, exclude: int) -> list[tuple[int, int, int]]:
    """Arcs allowed on nodes outside ``exclude``: (pair index, tail, head).

    Pairs are ordered by (min endpoint, max endpoint); an undirected sink-graph
    edge contributes both orientations under one pair index.
    """
    directed, undirected = sink_arcs(u)
    arcs = []
    for a, b in directed:
        if not (exclude >> a & 1 or exclude >> b & 1):
            arcs.append(((min(a, b), max(a, b)), a, b))
    for a, b in undirected:
        if not (exclude >> a & 1 or exclude >> b & 1):
            arcs.append(((a, b), a, b))
            arcs.append(((a, b), b, a))
    arcs.sort()
    index = {p: k for k, p in enumerate(sorted({p for p, _, _ in arcs}))}
    return [(index[p], a, b) for p, a, b in arcs]


def atransitive_arc_sets(n: int, candidates, stats: EnumerationStats | None = None):
    """Reverse search over acyclic atransitive arc sets drawn from ``candidates``.

    ``candidates`` is a list of (pair index, tail, head) sorted by pair index; at
    most one arc per pair index is used. Yields ``(succ, reach)`` where
    ``reach[v]`` is the strict descendant set of ``v``; the lists are reused, so
    copy them if kept. The empty set is yielded first.
    """
    succ = [0] * n
    reach = [0] * n
    ncand = len(candidates)

    def visit(start):
        if stats is not None:
            stats.nodes += 1
        yield succ, reach
        for k in range(start, ncand):
            p, a, b = candidates[k]
            if reach[b] >> a & 1 or reach[a] >> b & 1:
                continue
            below = reach[b] | 1 << b
            above = 1 << a
            for x in range(n):
                if reach[x] >> a & 1:
                    above |= 1 << x
            if any(succ[x] & below for x in bits(above)):
                continue
            saved = list(reach)
            succ[a] |= 1 << b
            for x in bits(above):
                reach[x] |= below
            nxt = k + 1
            while nxt < ncand and candidates[nxt][0] == p:
                nxt += 1
            yield from visit(nxt)
            succ[a] &= ~(1 << b)
            reach[:] = saved

    yield from visit(0)


def acyclic_arc_sets(n: int, candidates):
    """Reverse search over acyclic arc sets, one arc per pair index."""
    succ = [0] * n
    reach = [0] * n
    ncand = len(candidates)

    def visit(start):
        yield succ, reach
        for k in range(start, ncand):
            p, a, b = candidates[k]
            if reach[b] >> a & 1:
                continue
            below = reach[b] | 1 << b
            above = 1 << a
            for x in range(n):
                if reach[x] >> a & 1:
                    above |= 1 << x
            saved = list(reach)
            succ[a] |= 1 << b
            for x in bits(above):
                reach[x] |= below
            nxt = k + 1
            while nxt < ncand and candidates[nxt][0] == p:
                nxt += 1
            yield from visit(nxt)
            succ[a] &= ~(1 << b)
            reach[:] = saved

    yield from visit(0)


def faithful_posets(
    u: UndirectedGraph,
    *,
    stats: EnumerationStats | None = None,
    check: bool = False,
) -> Iterator[Poset]:
    """Every poset whose bound graph is ``u``, once each, as its Hasse diagram.

    With ``check=True`` every output is re-verified against ``u``.
    """
    require_smig(u)
    if stats is None:
        stats = EnumerationStats()
    seen = set()
    for sel in selections(u):
        selmask = sum(1 << i for i in sel)
        cands = _inner_candidates(u, selmask)
        for succ, reach in atransitive_arc_sets(u.n, cands, stats):
            rows = list(succ)
            for i in sel:
                implied = 0
                for w in bits(u.adj[i]):
                    implied |= reach[w]
                rows[i] = u.adj[i] & ~implied
            key = tuple(rows)
            if key in seen:
                stats.duplicates += 1
                continue
            seen.add(key)
            dag = Dag.from_succ(key, u.labels)
            if check and mig_rows(dag.succ, dag.topological_order) != list(u.adj):
                raise AssertionError(f"emitted poset {dag.arcs} is not faithful")
            stats.emitted += 1
            yield Poset(dag, check=False)


def faithful_dag_patterns(u: UndirectedGraph) -> Iterator[DagPattern]:
    """One pattern per selection and per DAG on the unselected nodes."""
    require_smig(u)
    for sel in selections(u):
        selmask = sum(1 << i for i in sel)
        cands = _inner_candidates(u, selmask)
        for succ, reach in acyclic_arc_sets(u.n, cands):
            base = list(succ)
            optional = []
            for i in sel:
                implied = 0
                for w in bits(u.adj[i]):
                    implied |= reach[w]
                opt = u.adj[i] & implied
                base[i] = u.adj[i] & ~opt
                optional += [(i, j) for j in bits(opt)]
            inner = tuple((a, b) for a in range(u.n) for b in bits(succ[a]))
            yield DagPattern(Dag.from_succ(base, u.labels), tuple(sorted(optional)), sel, inner)


def faithful_dags(u: UndirectedGraph, *, check: bool = False) -> Iterator[Dag]:
    """Every DAG faithful to ``u``, expanded from the patterns and deduplicated."""
    seen = set()
    for pattern in faithful_dag_patterns(u):
        for dag in pattern.completions():
            if dag.succ in seen:
                continue
            seen.add(dag.succ)
            if check and mig_rows(dag.succ, dag.topological_order) != list(u.adj):
                raise AssertionError(f"emitted DAG {dag.arcs} is not faithful")
            yield dag


def min_arc_faithful_dags(u: UndirectedGraph) -> list[Dag]:
    """Faithful DAGs with the fewest arcs, by exhaustive filtering."""
    best, out = None, []
    for dag in faithful_dags(u):
        m = dag.m
        if best is None or m < best:
            best, out = m, [dag]
        elif m == best:
            out.append(dag)
    return out


def tree_poset(u: UndirectedGraph) -> Poset:
    """Faithful poset whose Hasse diagram is a tree with arcs towards the root.

    The root of every piece is its lowest-numbered node adjacent to all others.
    """
    if u.n == 0:
        raise GraphInputError("empty graph has no tree poset")
    found = trivially_perfect_witness(u)
    if found is not None:
        raise NotTriviallyPerfectError(*found)
    succ = [0] * u.n

    def build(mask: int) -> int:
        centre = next(v for v in bits(mask) if mask & ~(u.adj[v] | 1 << v) == 0)
        rest = mask & ~(1 << centre)
        while rest:
            low = rest & -rest
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= u.adj[v]
                frontier = nxt & rest & ~comp
                comp |= frontier
            rest &= ~comp
            succ[build(comp)] |= 1 << centre
        return centre

    full = (1 << u.n) - 1
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= u.adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    if comp != full:
        raise GraphInputError("graph is disconnected; a tree poset needs a connected graph")
    build(full)
    return Poset(Dag.from_succ(succ, u.labels))
