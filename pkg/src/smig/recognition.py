"""Recognition of graphs with a faithful DAG on the same nodes, and the sink graph."""

from __future__ import annotations

from itertools import combinations

from .exceptions import NotSMIGError
from .graphs import (
    Dag,
    MixedGraph,
    UndirectedGraph,
    bits,
    boundary_masks,
    simplex_masks,
    simplicial_mask,
)


def smig_witness(u: UndirectedGraph) -> tuple[int, int] | None:
    """First edge (lexicographic) that lies in no simplex, or None.

    An edge a-b sits in a simplex iff some simplicial node is in Bd(a) & Bd(b).
    """
    bd = boundary_masks(u)
    simp = simplicial_mask(u)
    for a, b in u.edges:
        if not bd[a] & bd[b] & simp:
            return (a, b)
    return None


def is_smig(u: UndirectedGraph) -> bool:
    return smig_witness(u) is None


def require_smig(u: UndirectedGraph) -> None:
    w = smig_witness(u)
    if w is not None:
        raise NotSMIGError(w)


def _classify_quad(u: UndirectedGraph, quad) -> str | None:
    m = (1 << quad[0]) | (1 << quad[1]) | (1 << quad[2]) | (1 << quad[3])
    degs = sorted((u.adj[v] & m).bit_count() for v in quad)
    if degs == [1, 1, 2, 2]:
        return "P4"
    if degs == [2, 2, 2, 2]:
        return "C4"
    return None


def _walk(u: UndirectedGraph, quad, start: int) -> tuple[int, ...]:
    m = sum(1 << v for v in quad)
    order = [start]
    prev = -1
    cur = start
    while len(order) < 4:
        nxt = next(w for w in bits(u.adj[cur] & m) if w != prev and w not in order)
        order.append(nxt)
        prev, cur = cur, nxt
    return tuple(order)


def trivially_perfect_witness(u: UndirectedGraph):
    """Return ``(nodes, "P4" | "C4")`` for an induced P4/C4, or None.

    Nodes are listed in path/cycle order.
    """
    for quad in combinations(range(u.n), 4):
        kind = _classify_quad(u, quad)
        if kind == "P4":
            m = sum(1 << v for v in quad)
            end = min(v for v in quad if (u.adj[v] & m).bit_count() == 1)
            return _walk(u, quad, end), kind
        if kind == "C4":
            return _walk(u, quad, quad[0]), kind
    return None


def is_trivially_perfect(u: UndirectedGraph) -> bool:
    return trivially_perfect_witness(u) is None


def is_trivially_perfect_by_central_points(u: UndirectedGraph) -> bool:
    """Every connected induced piece must have a node adjacent to all others."""
    stack = [(1 << u.n) - 1]
    while stack:
        part = stack.pop()
        # split into components
        while part:
            low = part & -part
            comp = frontier = low
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= u.adj[v]
                frontier = nxt & part & ~comp
                comp |= frontier
            part &= ~comp
            if comp.bit_count() <= 2:
                continue
            centre = next((v for v in bits(comp) if comp & ~(u.adj[v] | 1 << v) == 0), None)
            if centre is None:
                return False
            stack.append(comp & ~(1 << centre))
    return True


def boundary_classes(u: UndirectedGraph) -> list[frozenset]:
    """Nodes grouped by identical closed neighbourhood, ordered by smallest member."""
    groups: dict[int, int] = {}
    for v, b in enumerate(boundary_masks(u)):
        groups[b] = groups.get(b, 0) | 1 << v
    return sorted((frozenset(bits(m)) for m in groups.values()), key=min)


def sink_graph(u: UndirectedGraph) -> MixedGraph:
    """Orient each edge towards the endpoint with the strictly larger boundary.

    Edges with equal boundaries stay undirected. Edges whose endpoint boundaries
    are incomparable get no edge at all (they exist in graphs such as the
    three-triangle example where both endpoints lie in different simplexes).
    """
    require_smig(u)
    directed, undirected = sink_arcs(u)
    return MixedGraph(u.n, directed, undirected, u.labels)


def sink_arcs(u: UndirectedGraph):
    bd = boundary_masks(u)
    directed, undirected = [], []
    for a, b in u.edges:
        if bd[a] == bd[b]:
            undirected.append((a, b))
        elif bd[a] & ~bd[b] == 0:
            directed.append((a, b))
        elif bd[b] & ~bd[a] == 0:
            directed.append((b, a))
    return directed, undirected


def has_unique_faithful_dag(u: UndirectedGraph) -> bool:
    """One simplicial node per simplex and the sink graph equals the minimal poset."""
    require_smig(u)
    pairs = simplex_masks(u)
    if any(t.bit_count() != 1 for _, t in pairs):
        return False
    directed, undirected = sink_arcs(u)
    if undirected:
        return False
    minimal = {(i, j) for _, t in pairs for i in bits(t) for j in bits(u.adj[i])}
    return set(directed) == minimal


def embed_as_induced_smig(u: UndirectedGraph) -> tuple[UndirectedGraph, Dag]:
    """Add one node per edge, joined to both endpoints.

    Returns the enlarged graph and the DAG whose arcs run from each new node to
    the endpoints of its edge; the original graph is the induced subgraph on
    nodes ``0..n-1``.
    """
    edges = u.edges
    n2 = u.n + len(edges)
    new_edges = list(edges)
    arcs = []
    labels = {v: u.label(v) for v in range(u.n)}
    for k, (a, b) in enumerate(edges):
        e = u.n + k
        new_edges += [(a, e), (b, e)]
        arcs += [(e, a), (e, b)]
        labels[e] = f"v_{u.label(a)}_{u.label(b)}"
    return UndirectedGraph(n2, new_edges, labels), Dag(n2, arcs, labels)
