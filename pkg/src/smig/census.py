"""Isomorphism-reduced and labelled counts of graphs and posets."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .enumeration import atransitive_arc_sets, faithful_posets
from .exceptions import CapacityError
from .graphs import UndirectedGraph, complete_graph, is_connected
from .recognition import has_unique_faithful_dag, is_smig

CANONICAL_NODE_LIMIT = 10
CENSUS_LIMIT = 7
POSET_LIMIT = 5


def _refine(adj, cells):
    """Split cells by neighbour counts into every cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups: dict[tuple, list] = {}
            for v in c:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            for sig in sorted(groups):
                new.append(groups[sig])
        if len(new) == len(cells):
            return new
        cells = new


def _code(adj, order) -> int:
    code = 0
    for i, v in enumerate(order):
        row = adj[v]
        for w in order[i + 1:]:
            code = code << 1 | (row >> w & 1)
    return code


def _best_code(adj, cells) -> int:
    cells = _refine(adj, cells)
    for i, c in enumerate(cells):
        if len(c) > 1:
            break
    else:
        return _code(adj, [c[0] for c in cells])
    reps = []
    for v in c:
        if not any(adj[v] & ~(1 << w) == adj[w] & ~(1 << v) for w in reps):
            reps.append(v)
    best = -1
    for v in reps:
        rest = [w for w in c if w != v]
        code = _best_code(adj, cells[:i] + [[v], rest] + cells[i + 1:])
        if code > best:
            best = code
    return best


def canonical_form(u: UndirectedGraph, colors=None, node_limit: int = CANONICAL_NODE_LIMIT) -> bytes:
    """Isomorphism-invariant code: the largest adjacency code over the leaves of
    an individualisation-refinement search started from the degree partition.

    ``colors`` optionally assigns an integer class to every node; isomorphisms
    must then preserve classes.
    """
    if u.n > node_limit:
        raise CapacityError(f"canonical form limited to {node_limit} nodes, got {u.n}")
    if colors is None:
        colors = [0] * u.n
    start: dict[int, list] = {}
    for v in range(u.n):
        start.setdefault(colors[v], []).append(v)
    cells = [start[k] for k in sorted(start)]
    code = _best_code(u.adj, cells) if u.n else 0
    head = [u.n] + [len(c) for c in cells] + [255] + [sorted(start)[k] for k in range(len(cells))]
    nbytes = (u.n * (u.n - 1) // 2 + 7) // 8
    return bytes(head) + code.to_bytes(nbytes, "big")


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[tuple[int, ...], ...]:
    """Adjacency rows of one representative per isomorphism class on n nodes."""
    if n == 0:
        return ((),)
    reps = {}
    for adj in _graph_classes(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [r | (nb >> v & 1) << (n - 1) for v, r in enumerate(adj)] + [nb]
            g = UndirectedGraph.from_adjacency(rows)
            reps.setdefault(canonical_form(g), tuple(rows))
    return tuple(reps.values())


def graph_classes(n: int, connected: bool = False) -> list[UndirectedGraph]:
    out = [UndirectedGraph.from_adjacency(a) for a in _graph_classes(n)]
    if connected:
        out = [g for g in out if is_connected(g)]
    return out


def census_connected(n: int, allow_expensive: bool = False) -> tuple[int, int, int]:
    """(connected graphs, connected SMIGs, unique faithful DAG), up to isomorphism."""
    if n > CENSUS_LIMIT and not allow_expensive or n > CENSUS_LIMIT + 1:
        raise CapacityError(f"census beyond n={CENSUS_LIMIT} needs allow_expensive (max {CENSUS_LIMIT + 1})")
    graphs = graph_classes(n, connected=True)
    smigs = [g for g in graphs if is_smig(g)]
    unique = sum(1 for g in smigs if has_unique_faithful_dag(g))
    return len(graphs), len(smigs), unique


def _all_arcs(n: int):
    cands = []
    for k, (a, b) in enumerate(combinations(range(n), 2)):
        cands += [(k, a, b), (k, b, a)]
    return cands


def count_labeled_posets(n: int, allow_expensive: bool = False) -> int:
    """Labelled posets on n elements, counted as their Hasse diagrams."""
    if n > POSET_LIMIT and not allow_expensive or n > POSET_LIMIT + 1:
        raise CapacityError(f"poset count beyond n={POSET_LIMIT} needs allow_expensive (max {POSET_LIMIT + 1})")
    return sum(1 for _ in atransitive_arc_sets(n, _all_arcs(n)))


def count_faithful_to_complete(n: int, allow_expensive: bool = False) -> int:
    """Posets faithful to the complete graph, enumerated and checked against
    n times the poset count on n - 1 elements."""
    if n > POSET_LIMIT and not allow_expensive or n > POSET_LIMIT + 1:
        raise CapacityError(f"count beyond n={POSET_LIMIT} needs allow_expensive (max {POSET_LIMIT + 1})")
    direct = sum(1 for _ in faithful_posets(complete_graph(n)))
    closed = n * count_labeled_posets(n - 1, allow_expensive=True) if n else 0
    if direct != closed:
        raise AssertionError(f"direct count {direct} != {n} * P({n - 1}) = {closed}")
    return direct


def height1_poset_classes(n: int, connected: bool = False) -> set[bytes]:
    """Canonical codes of posets of height at most one on n elements.

    A poset of height <= 1 is its skeleton with every node marked isolated,
    minimal or maximal, so a coloured canonical form identifies it.
    """
    codes = set()
    for r in range(0, n + 1):
        if connected and r and n > 1:
            continue
        rest = n - r
        splits = [(0, 0)] if rest == 0 else [(s, rest - s) for s in range(1, rest)]
        for s, t in splits:
            src = list(range(r, r + s))
            snk = list(range(r + s, n))
            colors = [0] * r + [1] * s + [2] * t
            pairs = [(a, b) for a in src for b in snk]
            for code in range(1 << len(pairs)):
                edges = [p for k, p in enumerate(pairs) if code >> k & 1]
                g = UndirectedGraph(n, edges)
                if any(not g.adj[v] for v in src + snk):
                    continue
                if connected and not is_connected(g):
                    continue
                codes.add(canonical_form(g, colors))
    return codes


def count_smigs_height1(n: int, connected: bool = True) -> int:
    """Non-isomorphic SMIGs on n nodes, counted two ways that must agree:
    filtering the graph census, and counting height-one posets up to
    isomorphism (each is the unique minimal poset of its bound graph)."""
    if n > CENSUS_LIMIT:
        raise CapacityError(f"SMIG count limited to n={CENSUS_LIMIT}")
    direct = sum(1 for g in graph_classes(n, connected) if is_smig(g))
    via_posets = len(height1_poset_classes(n, connected))
    if direct != via_posets:
        raise AssertionError(f"SMIG census {direct} != height-one poset classes {via_posets}")
    return direct


def table1(max_n: int, allow_expensive: bool = False) -> list[tuple[int, int, int, int]]:
    return [(n,) + census_connected(n, allow_expensive) for n in range(2, max_n + 1)]


def table2(max_n: int, allow_expensive: bool = False) -> list[tuple[int, int, int]]:
    return [
        (n, count_labeled_posets(n, allow_expensive), count_faithful_to_complete(n, allow_expensive))
        for n in range(1, max_n + 1)
    ]


def render_table(headers, rows) -> str:
    cells = [[str(h) for h in headers]] + [[f"{x:,}" if isinstance(x, int) else str(x) for x in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells) + "\n"
