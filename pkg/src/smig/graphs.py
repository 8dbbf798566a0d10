"""Graph types backed by per-node adjacency bitsets.

Node ``i`` is bit ``1 << i``. All graph values are immutable; every operation
returns a new value.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .exceptions import CycleError, GraphInputError


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def _check_node(n: int, v: int) -> None:
    if not isinstance(v, int) or v < 0 or v >= n:
        raise GraphInputError(f"node {v!r} out of range for graph on {n} nodes")


def _freeze_labels(labels: Mapping[int, str] | None, n: int):
    if not labels:
        return None
    out = {}
    for k, name in labels.items():
        _check_node(n, k)
        out[k] = str(name)
    return out


class UndirectedGraph:
    """Simple undirected graph on nodes ``0..n-1``."""

    __slots__ = ("n", "adj", "labels", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise GraphInputError("node count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            _check_node(n, u)
            _check_node(n, v)
            if u == v:
                raise GraphInputError(f"self-loop at node {u}")
            if adj[u] >> v & 1:
                raise GraphInputError(f"duplicate edge {u}-{v}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self.labels = _freeze_labels(labels, n)
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Iterable[int], labels=None) -> UndirectedGraph:
        """Build from symmetric, loop-free bitset rows (not re-validated)."""
        g = cls.__new__(cls)
        g.adj = tuple(adj)
        g.n = len(g.adj)
        g.labels = _freeze_labels(labels, g.n)
        g._hash = None
        return g

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def node_index(self, name) -> int:
        """Resolve a label (or a decimal id) to a node index."""
        if self.labels:
            for k, lab in self.labels.items():
                if lab == name:
                    return k
        try:
            v = int(name)
        except (TypeError, ValueError):
            raise GraphInputError(f"unknown node {name!r}") from None
        _check_node(self.n, v)
        return v

    def induced_subgraph(self, nodes: Iterable[int]) -> UndirectedGraph:
        """Subgraph on ``nodes``, relabelled densely in increasing order."""
        keep = sorted(set(nodes))
        pos = {v: i for i, v in enumerate(keep)}
        km = mask_of(keep)
        adj = [mask_of(pos[w] for w in bits(self.adj[v] & km)) for v in keep]
        labels = {pos[v]: self.labels[v] for v in keep if self.labels and v in self.labels}
        return UndirectedGraph.from_adjacency(adj, labels or None)

    def complement(self) -> UndirectedGraph:
        full = (1 << self.n) - 1
        return UndirectedGraph.from_adjacency(
            [full & ~r & ~(1 << v) for v, r in enumerate(self.adj)], self.labels
        )

    def __eq__(self, other):
        if not isinstance(other, UndirectedGraph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("U", self.adj))
        return self._hash

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, edges={self.edges})"


def _topological_order(n: int, succ: tuple[int, ...]):
    """Kahn's algorithm; returns (order, leftover_mask)."""
    indeg = [0] * n
    for u in range(n):
        for v in bits(succ[u]):
            indeg[v] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v in bits(succ[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
    left = (1 << n) - 1
    for v in order:
        left &= ~(1 << v)
    return order, left


def _find_cycle(succ, left: int) -> list[int]:
    # every node of ``left`` keeps an in-arc from ``left``; walk backwards
    pred = {}
    for u in bits(left):
        for v in bits(succ[u] & left):
            pred.setdefault(v, u)
    v = next(bits(left))
    seen = []
    while v not in seen:
        seen.append(v)
        v = pred[v]
    cyc = seen[seen.index(v):]
    cyc.reverse()
    return cyc + [cyc[0]]


class Dag:
    """Directed acyclic graph; ``succ[u]`` is the bitset of children of ``u``."""

    __slots__ = ("n", "succ", "labels", "_order", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = (), labels=None):
        succ = [0] * n
        for u, v in arcs:
            _check_node(n, u)
            _check_node(n, v)
            if u == v:
                raise GraphInputError(f"self-loop at node {u}")
            if succ[u] >> v & 1:
                raise GraphInputError(f"duplicate arc {u}->{v}")
            succ[u] |= 1 << v
        self._init(tuple(succ), labels)

    def _init(self, succ, labels):
        self.n = len(succ)
        self.succ = succ
        self.labels = _freeze_labels(labels, self.n)
        order, left = _topological_order(self.n, succ)
        if left:
            raise CycleError(_find_cycle(succ, left))
        self._order = tuple(order)
        self._hash = None

    @classmethod
    def from_succ(cls, succ: Iterable[int], labels=None) -> Dag:
        g = cls.__new__(cls)
        g._init(tuple(succ), labels)
        return g

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.succ[u])]

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.succ)

    @property
    def topological_order(self) -> tuple[int, ...]:
        return self._order

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.succ[u] >> v & 1)

    def parents(self, v: int) -> int:
        return mask_of(u for u in range(self.n) if self.succ[u] >> v & 1)

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def skeleton(self) -> UndirectedGraph:
        adj = list(self.succ)
        for u in range(self.n):
            for v in bits(self.succ[u]):
                adj[v] |= 1 << u
        return UndirectedGraph.from_adjacency(adj, self.labels)

    def __eq__(self, other):
        if not isinstance(other, Dag):
            return NotImplemented
        return self.succ == other.succ

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("D", self.succ))
        return self._hash

    def __repr__(self):
        return f"Dag(n={self.n}, arcs={self.arcs})"


class MixedGraph:
    """Graph carrying directed arcs and undirected edges, at most one per pair."""

    __slots__ = ("n", "directed", "undirected", "labels")

    def __init__(self, n: int, directed=(), undirected=(), labels=None):
        seen = set()
        d, u_ = set(), set()
        for a, b in directed:
            _check_node(n, a)
            _check_node(n, b)
            key = frozenset((a, b))
            if a == b or key in seen:
                raise GraphInputError(f"pair {a},{b} carries more than one edge or is a loop")
            seen.add(key)
            d.add((a, b))
        for a, b in undirected:
            _check_node(n, a)
            _check_node(n, b)
            key = frozenset((a, b))
            if a == b or key in seen:
                raise GraphInputError(f"pair {a},{b} carries more than one edge or is a loop")
            seen.add(key)
            u_.add((min(a, b), max(a, b)))
        self.n = n
        self.directed = frozenset(d)
        self.undirected = frozenset(u_)
        self.labels = _freeze_labels(labels, n)

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def skeleton(self) -> UndirectedGraph:
        pairs = {(min(a, b), max(a, b)) for a, b in self.directed} | set(self.undirected)
        return UndirectedGraph(self.n, sorted(pairs), self.labels)

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (self.n, self.directed, self.undirected) == (other.n, other.directed, other.undirected)

    def __hash__(self):
        return hash(("M", self.n, self.directed, self.undirected))

    def __repr__(self):
        return f"MixedGraph(n={self.n}, directed={sorted(self.directed)}, undirected={sorted(self.undirected)})"


@dataclass(frozen=True)
class SimplexDecomposition:
    """Simplexes of a graph, each paired with its simplicial nodes.

    ``simplexes[k]`` and ``simplicial_nodes[k]`` describe the k-th simplex; order
    is by smallest simplicial node.
    """

    simplexes: tuple[frozenset, ...]
    simplicial_nodes: tuple[frozenset, ...]

    def __len__(self):
        return len(self.simplexes)


def neighborhood(g: UndirectedGraph, v: int) -> frozenset:
    _check_node(g.n, v)
    return frozenset(bits(g.adj[v]))


def boundary(g: UndirectedGraph, v: int) -> frozenset:
    _check_node(g.n, v)
    return frozenset(bits(g.adj[v] | 1 << v))


def boundary_masks(g: UndirectedGraph) -> list[int]:
    return [r | 1 << v for v, r in enumerate(g.adj)]


def is_clique_mask(g: UndirectedGraph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~(g.adj[v] | 1 << v):
            return False
    return True


def is_simplicial(g: UndirectedGraph, v: int) -> bool:
    """True iff the closed neighbourhood of ``v`` is a clique."""
    _check_node(g.n, v)
    return is_clique_mask(g, g.adj[v] | 1 << v)


def is_simplicial_by_containment(g: UndirectedGraph, v: int) -> bool:
    """Equivalent test: Bd(v) is contained in Bd(w) for every neighbour w."""
    _check_node(g.n, v)
    bd = g.adj[v] | 1 << v
    return all(bd & ~(g.adj[w] | 1 << w) == 0 for w in bits(g.adj[v]))


def simplicial_mask(g: UndirectedGraph) -> int:
    bd = boundary_masks(g)
    out = 0
    for v in range(g.n):
        b = bd[v]
        if all(b & ~bd[w] == 0 for w in bits(g.adj[v])):
            out |= 1 << v
    return out


def simplex_masks(g: UndirectedGraph) -> list[tuple[int, int]]:
    """(simplex, simplicial nodes) bitmask pairs, ordered by first simplicial node."""
    bd = boundary_masks(g)
    groups: dict[int, int] = {}
    for v in bits(simplicial_mask(g)):
        groups[bd[v]] = groups.get(bd[v], 0) | 1 << v
    return sorted(groups.items(), key=lambda kv: kv[1] & -kv[1])


def simplex_decomposition(g: UndirectedGraph) -> SimplexDecomposition:
    pairs = simplex_masks(g)
    return SimplexDecomposition(
        tuple(frozenset(bits(s)) for s, _ in pairs),
        tuple(frozenset(bits(t)) for _, t in pairs),
    )


def connected_components(g: UndirectedGraph) -> list[frozenset]:
    left = (1 << g.n) - 1
    comps = []
    while left:
        low = left & -left
        comp = frontier = low
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(frozenset(bits(comp)))
        left &= ~comp
    return comps


def is_connected(g: UndirectedGraph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def maximal_clique_masks(g: UndirectedGraph, within: int | None = None) -> Iterator[int]:
    """Bron-Kerbosch with Tomita pivoting over bitsets."""
    adj = g.adj
    cand = (1 << g.n) - 1 if within is None else within
    if not cand:
        return

    def expand(r, p, x):
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda w: (p & adj[w]).bit_count())
        for v in bits(p & ~adj[pivot]):
            yield from expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, cand, 0)


def maximal_cliques(g: UndirectedGraph) -> list[frozenset]:
    return sorted((frozenset(bits(c)) for c in maximal_clique_masks(g)), key=sorted)


def complete_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> UndirectedGraph:
    """Center is node 0."""
    return UndirectedGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> UndirectedGraph:
    return UndirectedGraph(n)


def petersen_graph() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return UndirectedGraph(10, outer + spokes + inner)
