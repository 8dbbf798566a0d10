"""Ancestor calculus, transitive closure/reduction and the DAG -> graph map."""

from __future__ import annotations

from .graphs import Dag, UndirectedGraph, _check_node, bits


def descendant_masks(g: Dag) -> list[int]:
    """Reflexive descendant bitset of every node (reverse topological sweep)."""
    desc = [1 << v for v in range(g.n)]
    for u in reversed(g.topological_order):
        d = desc[u]
        for w in bits(g.succ[u]):
            d |= desc[w]
        desc[u] = d
    return desc


def ancestor_masks(g: Dag) -> list[int]:
    anc = [1 << v for v in range(g.n)]
    for u in g.topological_order:
        for w in bits(g.succ[u]):
            anc[w] |= anc[u]
    return anc


def ancestors(g: Dag, v: int) -> frozenset:
    """All nodes with a directed path to ``v``, ``v`` included."""
    _check_node(g.n, v)
    return frozenset(bits(ancestor_masks(g)[v]))


def descendants(g: Dag, v: int) -> frozenset:
    _check_node(g.n, v)
    return frozenset(bits(descendant_masks(g)[v]))


def closure_succ(g: Dag) -> list[int]:
    return [d & ~(1 << v) for v, d in enumerate(descendant_masks(g))]


def reduction_from_closure(strict: list[int]) -> list[int]:
    """Hasse rows from strict-descendant rows of a transitive DAG."""
    red = []
    for u, s in enumerate(strict):
        implied = 0
        for w in bits(s):
            implied |= strict[w]
        red.append(s & ~implied)
    return red


def transitive_closure(g: Dag) -> Dag:
    return Dag.from_succ(closure_succ(g), g.labels)


def transitive_reduction(g: Dag) -> Dag:
    return Dag.from_succ(reduction_from_closure(closure_succ(g)), g.labels)


def is_atransitive(g: Dag) -> bool:
    return tuple(reduction_from_closure(closure_succ(g))) == g.succ


def is_transitive(g: Dag) -> bool:
    return tuple(closure_succ(g)) == g.succ


def mig_rows(succ, order) -> list[int]:
    """Adjacency rows of the marginal independence graph of a DAG.

    ``order`` must be a topological order of ``succ``. Two nodes are adjacent
    iff they share an ancestor, so the neighbours of ``v`` are the descendants
    of its ancestors.
    """
    n = len(succ)
    desc = [1 << v for v in range(n)]
    anc = [1 << v for v in range(n)]
    for u in reversed(order):
        d = desc[u]
        for w in bits(succ[u]):
            d |= desc[w]
        desc[u] = d
    for u in order:
        for w in bits(succ[u]):
            anc[w] |= anc[u]
    adj = []
    for v in range(n):
        r = 0
        for a in bits(anc[v]):
            r |= desc[a]
        adj.append(r & ~(1 << v))
    return adj


def marginal_independence_graph(g: Dag) -> UndirectedGraph:
    """Graph joining every pair of nodes that has a common ancestor in ``g``."""
    return UndirectedGraph.from_adjacency(mig_rows(g.succ, g.topological_order), g.labels)


def closure_invariance_check(g: Dag) -> bool:
    return marginal_independence_graph(g) == marginal_independence_graph(transitive_closure(g))


def height(g: Dag) -> int:
    """Number of arcs on a longest directed path."""
    level = [0] * g.n
    for u in g.topological_order:
        for w in bits(g.succ[u]):
            level[w] = max(level[w], level[u] + 1)
    return max(level, default=0)


class Poset:
    """Partial order stored as its transitive reduction (Hasse diagram).

    Equality is equality of the labelled reduction arc sets.
    """

    __slots__ = ("reduction", "_closure")

    def __init__(self, reduction: Dag, check: bool = True):
        if check and not is_atransitive(reduction):
            raise ValueError("poset must be given by its transitive reduction; use Poset.from_dag")
        self.reduction = reduction
        self._closure = None

    @classmethod
    def from_dag(cls, g: Dag) -> Poset:
        return cls(transitive_reduction(g), check=False)

    @property
    def n(self) -> int:
        return self.reduction.n

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return self.reduction.arcs

    @property
    def closure(self) -> Dag:
        if self._closure is None:
            self._closure = transitive_closure(self.reduction)
        return self._closure

    def key(self) -> tuple[int, ...]:
        return self.reduction.succ

    def __eq__(self, other):
        if not isinstance(other, Poset):
            return NotImplemented
        return self.reduction.succ == other.reduction.succ

    def __hash__(self):
        return hash(("P", self.reduction.succ))

    def __repr__(self):
        return f"Poset(n={self.n}, reduction={self.arcs})"
