"""Faithful DAGs with auxiliary nodes, and edge clique covers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exceptions import CapacityError, GraphInputError
from .graphs import Dag, UndirectedGraph, bits, is_clique_mask, mask_of, maximal_clique_masks, simplex_masks
from .posets import mig_rows, reduction_from_closure
from .recognition import is_smig

EXACT_NODE_LIMIT = 20
BRUTEFORCE_EDGE_LIMIT = 12


@dataclass(frozen=True)
class CliqueCover:
    cliques: tuple[frozenset, ...]

    def __len__(self):
        return len(self.cliques)

    def uncovered_edge(self, u: UndirectedGraph, edges=None):
        """First target edge contained in no listed set, or None."""
        masks = [mask_of(c) for c in self.cliques]
        for a, b in (u.edges if edges is None else edges):
            e = 1 << a | 1 << b
            if not any(m & e == e for m in masks):
                return (a, b)
        return None

    def validate(self, u: UndirectedGraph, edges=None) -> None:
        for c in self.cliques:
            if any(not 0 <= v < u.n for v in c):
                raise GraphInputError(f"cover set {sorted(c)} has nodes outside the graph")
            if not is_clique_mask(u, mask_of(c)):
                raise GraphInputError(f"cover set {sorted(c)} is not a clique")
        w = self.uncovered_edge(u, edges)
        if w is not None:
            raise GraphInputError(f"edge {w[0]}-{w[1]} is not covered")


@dataclass(frozen=True)
class AugmentedDag:
    """DAG over observed nodes ``0..n-1`` plus auxiliary nodes ``n..``."""

    dag: Dag
    observed: frozenset
    auxiliary: frozenset
    cover: CliqueCover | None = None
    proven_minimal: bool = False

    def restricted_graph(self) -> UndirectedGraph:
        rows = mig_rows(self.dag.succ, self.dag.topological_order)
        keep = mask_of(self.observed)
        obs = sorted(self.observed)
        pos = {v: i for i, v in enumerate(obs)}
        return UndirectedGraph.from_adjacency([mask_of(pos[w] for w in bits(rows[v] & keep)) for v in obs])

    def is_faithful_to(self, u: UndirectedGraph) -> bool:
        return self.restricted_graph() == u


def hardness_gadget(u: UndirectedGraph) -> UndirectedGraph:
    """Attach a pendant node ``n + i`` to every node ``i``."""
    n = u.n
    labels = {v: u.label(v) for v in range(n)}
    labels.update({n + v: f"w_{u.label(v)}" for v in range(n)})
    return UndirectedGraph(2 * n, u.edges + [(v, n + v) for v in range(n)], labels)


def _edge_masks(edges):
    return [1 << a | 1 << b for a, b in edges]


def greedy_clique_cover(u: UndirectedGraph, edges=None) -> CliqueCover:
    """Grow each still-uncovered edge into a maximal clique.

    The clique is extended by the common neighbour adjacent to most clique
    members along uncovered edges; lowest node id breaks ties.
    """
    targets = sorted(u.edges if edges is None else [(min(e), max(e)) for e in edges])
    uncovered = [0] * u.n
    for a, b in targets:
        uncovered[a] |= 1 << b
        uncovered[b] |= 1 << a
    cliques = []
    for a, b in targets:
        if not uncovered[a] >> b & 1:
            continue
        clique = 1 << a | 1 << b
        cand = u.adj[a] & u.adj[b]
        while cand:
            v = max(bits(cand), key=lambda w: ((uncovered[w] & clique).bit_count(), -w))
            clique |= 1 << v
            cand &= u.adj[v]
        for x in bits(clique):
            uncovered[x] &= ~clique
        cliques.append(frozenset(bits(clique)))
    return CliqueCover(tuple(cliques))


def _exact_cover(u: UndirectedGraph, targets, bound: int):
    """Smallest cover with fewer than ``bound`` cliques, or None.

    Branches on the uncovered edge lying in the fewest maximal cliques; the
    lower bound counts uncovered edges that pairwise share no clique.
    """
    em = _edge_masks(targets)
    ne = len(targets)
    if ne == 0:
        return [] if bound > 0 else None
    within = 0
    for m in em:
        within |= m
    cliques = [c for c in maximal_clique_masks(u) if any(c & m == m for m in em)]
    cov = [sum(1 << k for k, m in enumerate(em) if c & m == m) for c in cliques]
    holders = [[j for j, c in enumerate(cliques) if c & em[k] == em[k]] for k in range(ne)]
    compat = []
    for k in range(ne):
        row = 0
        for l in range(ne):
            if is_clique_mask(u, em[k] | em[l]):
                row |= 1 << l
        compat.append(row)

    best = [bound, None]
    chosen = []

    def lower_bound(unc):
        picked = 0
        count = 0
        for k in bits(unc):
            if not compat[k] & picked:
                picked |= 1 << k
                count += 1
        return count

    def rec(unc):
        if not unc:
            if len(chosen) < best[0]:
                best[0] = len(chosen)
                best[1] = list(chosen)
            return
        if len(chosen) + lower_bound(unc) >= best[0]:
            return
        k = min(bits(unc), key=lambda e: len(holders[e]))
        for j in sorted(holders[k], key=lambda j: -(cov[j] & unc).bit_count()):
            chosen.append(cliques[j])
            rec(unc & ~cov[j])
            chosen.pop()

    rec((1 << ne) - 1)
    return best[1]


def edge_clique_cover(
    u: UndirectedGraph,
    mode: str = "exact",
    budget: int | None = None,
    edges=None,
    node_limit: int = EXACT_NODE_LIMIT,
) -> CliqueCover | None:
    """Cover every edge (or every edge of ``edges``) with cliques of ``u``.

    ``exact`` returns a minimum cover; with ``budget`` it returns a cover of at
    most ``budget`` cliques or None when none exists. ``greedy`` ignores the
    budget.
    """
    if mode == "greedy":
        return greedy_clique_cover(u, edges)
    if mode != "exact":
        raise GraphInputError(f"unknown cover mode {mode!r}")
    if u.n > node_limit:
        raise CapacityError(f"exact clique cover limited to {node_limit} nodes, got {u.n}")
    targets = sorted(u.edges if edges is None else [(min(e), max(e)) for e in edges])
    for a, b in targets:
        if not u.has_edge(a, b):
            raise GraphInputError(f"{a}-{b} is not an edge")
    if budget is not None:
        found = _exact_cover(u, targets, budget + 1)
    else:
        upper = greedy_clique_cover(u, targets)
        found = _exact_cover(u, targets, len(upper))
        if found is None:
            return upper
    if found is None:
        return None
    return CliqueCover(tuple(sorted((frozenset(bits(c)) for c in found), key=sorted)))


def _aux_labels(u: UndirectedGraph, k: int) -> dict:
    labels = {v: u.label(v) for v in range(u.n)}
    labels.update({u.n + j: f"q{j}" for j in range(k)})
    return labels


def dag_from_cover(u: UndirectedGraph, cover: CliqueCover) -> AugmentedDag:
    """One auxiliary node per clique, with arcs to every member."""
    cover.validate(u)
    k = len(cover)
    succ = [0] * (u.n + k)
    for j, c in enumerate(cover.cliques):
        succ[u.n + j] = mask_of(c)
    dag = Dag.from_succ(succ, _aux_labels(u, k))
    out = AugmentedDag(dag, frozenset(range(u.n)), frozenset(range(u.n, u.n + k)), cover)
    if not out.is_faithful_to(u):
        raise AssertionError("clique cover construction is not faithful")
    return out


def unexplained_edges(u: UndirectedGraph) -> list[tuple[int, int]]:
    """Edges lying in no simplex."""
    simp = [s for s, _ in simplex_masks(u)]
    return [(a, b) for a, b in u.edges if not any(s >> a & 1 and s >> b & 1 for s in simp)]


def min_auxiliary_dag(u: UndirectedGraph, mode: str = "exact", budget: int | None = None) -> AugmentedDag | None:
    """Faithful DAG with few auxiliary nodes.

    One simplicial node per simplex points to its neighbours; every edge outside
    the simplexes is covered by cliques, each realised by an auxiliary node.
    The count is exact for graphs with a faithful DAG (zero), for graphs needing
    one auxiliary node, and for pendant gadgets with an exact cover; otherwise
    it is an upper bound. With ``budget`` the result has at most that many
    auxiliary nodes, or None is returned when the cover cannot achieve it.
    """
    pairs = simplex_masks(u)
    residual = unexplained_edges(u)
    cover = edge_clique_cover(u, mode, budget=budget, edges=residual) if residual else CliqueCover(())
    if cover is None or budget is not None and len(cover) > budget:
        return None
    k = len(cover)
    succ = [0] * (u.n + k)
    for _, simplicial in pairs:
        i = (simplicial & -simplicial).bit_length() - 1
        succ[i] = u.adj[i]
    for j, c in enumerate(cover.cliques):
        succ[u.n + j] = mask_of(c)
    dag = Dag.from_succ(succ, _aux_labels(u, k))
    proven = k == 0 or (k == 1 and not is_smig(u))
    out = AugmentedDag(dag, frozenset(range(u.n)), frozenset(range(u.n, u.n + k)), cover, proven)
    if not out.is_faithful_to(u):
        raise AssertionError("auxiliary construction is not faithful")
    return out


def min_auxiliary_bruteforce(
    u: UndirectedGraph, max_q: int, edge_limit: int = BRUTEFORCE_EDGE_LIMIT
) -> AugmentedDag | None:
    """Exhaustive minimum number of auxiliary nodes, or None if above ``max_q``.

    Any faithful DAG can be rewritten without changing which observed pairs
    share an ancestor: keep the transitive closure of reachability among the
    observed nodes and give every auxiliary node arcs straight to its observed
    descendants. The search therefore ranges over every poset on the observed
    nodes with arcs along edges of ``u``, and covers the pairs it leaves
    unexplained with sets that are cliques of ``u`` and closed under taking
    descendants.
    """
    if u.m > edge_limit:
        raise CapacityError(f"auxiliary brute force limited to {edge_limit} edges, got {u.m}")
    n = u.n
    edges = u.edges
    cliques = []
    for c in range(1, 1 << n):
        if is_clique_mask(u, c):
            cliques.append(c)

    closures = set()
    succ = [0] * n
    reach = [1 << v for v in range(n)]

    def walk(k):
        if k == len(edges):
            closures.add(tuple(reach))
            return
        walk(k + 1)
        a, b = edges[k]
        for x, y in ((a, b), (b, a)):
            if reach[y] >> x & 1:
                continue
            saved = list(reach)
            succ[x] |= 1 << y
            for z in range(n):
                if reach[z] >> x & 1:
                    reach[z] |= reach[y]
            walk(k + 1)
            succ[x] &= ~(1 << y)
            reach[:] = saved

    walk(0)

    best = None
    for desc in sorted(closures):
        anc = [sum(1 << x for x in range(n) if desc[x] >> v & 1) for v in range(n)]
        shared = [0] * n
        ok = True
        for v in range(n):
            for a in bits(anc[v]):
                shared[v] |= desc[a]
            shared[v] &= ~(1 << v)
            if shared[v] & ~u.adj[v]:
                ok = False
                break
        if not ok:
            continue
        residual = [(a, b) for a, b in edges if not shared[a] >> b & 1]
        limit = max_q if best is None else len(best[1]) - 1
        if len(residual) and limit < 1:
            continue
        closed = [c for c in cliques if all(desc[v] & ~c == 0 for v in bits(c))]
        rm = _edge_masks(residual)
        useful = [c for c in closed if any(c & m == m for m in rm)]
        useful = [c for c in useful if not any(d != c and c & ~d == 0 for d in useful)]
        found = None
        for size in range(0, limit + 1):
            for combo in combinations(useful, size):
                if all(any(c & m == m for c in combo) for m in rm):
                    found = combo
                    break
            if found is not None:
                break
        if found is not None and (best is None or len(found) < len(best[1])):
            best = (desc, found)
            if not found:
                break
    if best is None:
        return None
    desc, found = best
    k = len(found)
    strict = [d & ~(1 << v) for v, d in enumerate(desc)]
    succ = reduction_from_closure(strict) + [c for c in found]
    dag = Dag.from_succ(succ, _aux_labels(u, k))
    cover = CliqueCover(tuple(frozenset(bits(c)) for c in found))
    out = AugmentedDag(dag, frozenset(range(n)), frozenset(range(n, n + k)), cover, True)
    if not out.is_faithful_to(u):
        raise AssertionError("brute-force witness is not faithful")
    return out
