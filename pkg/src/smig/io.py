"""Text formats: edge list, DOT and JSON, for all graph types.

Edge list::

    # name=0:a1          optional node labels, ``# name=<id>:<label>``
    # directed=true      arcs instead of edges (``# poset=true`` for Hasse diagrams)
    3 2                  node count and line count
    0 1
    1 2

Mixed graphs write ``u -> v`` and ``u -- v`` lines. JSON objects carry ``n``,
``edges``, ``arcs`` and ``labels``.
"""

from __future__ import annotations

import json
import re

from .exceptions import GraphInputError
from .graphs import Dag, MixedGraph, UndirectedGraph
from .posets import Poset

FORMATS = ("edgelist", "dot", "json")


class _Parsed:
    def __init__(self):
        self.n = None
        self.edges = []
        self.arcs = []
        self.labels = {}
        self.flags = set()
        self.edge_lines = []
        self.arc_lines = []


def _parse_edgelist(text: str) -> _Parsed:
    out = _Parsed()
    expected = None
    count = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("name="):
                ident, sep, label = body[5:].partition(":")
                if not sep:
                    raise GraphInputError("label comment must read '# name=<id>:<label>'", lineno)
                try:
                    out.labels[int(ident)] = label
                except ValueError:
                    raise GraphInputError(f"bad node id {ident!r} in label comment", lineno) from None
            elif "=" in body:
                key, _, val = body.partition("=")
                if val.strip().lower() == "true":
                    out.flags.add(key.strip())
            continue
        tokens = line.split()
        if expected is None:
            if len(tokens) != 2:
                raise GraphInputError("header must be 'n m'", lineno)
            try:
                out.n, expected = int(tokens[0]), int(tokens[1])
            except ValueError:
                raise GraphInputError("header must be two integers", lineno) from None
            if out.n < 0 or expected < 0:
                raise GraphInputError("negative count in header", lineno)
            continue
        kind = None
        if len(tokens) == 3 and tokens[1] in ("->", "--"):
            kind = tokens[1]
            tokens = [tokens[0], tokens[2]]
        if len(tokens) != 2:
            raise GraphInputError(f"expected 'u v', got {line!r}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphInputError(f"non-integer node in {line!r}", lineno) from None
        for v in (a, b):
            if not 0 <= v < out.n:
                raise GraphInputError(f"node {v} out of range 0..{out.n - 1}", lineno)
        if a == b:
            raise GraphInputError(f"self-loop at node {a}", lineno)
        if kind is None:
            kind = "->" if out.flags & {"directed", "poset"} else "--"
        if kind == "->":
            out.arcs.append((a, b))
            out.arc_lines.append(lineno)
        else:
            out.edges.append((a, b))
            out.edge_lines.append(lineno)
        count += 1
    if expected is None:
        raise GraphInputError("missing 'n m' header")
    if count != expected:
        raise GraphInputError(f"header declares {expected} lines but {count} were given")
    for k in out.labels:
        if not 0 <= k < out.n:
            raise GraphInputError(f"label for node {k} out of range")
    return out


_DOT_HEAD = re.compile(r"^\s*(strict\s+)?(graph|digraph)\s*(\"[^\"]*\"|[\w.]+)?\s*\{", re.S)
_DOT_ID = r"(\"(?:[^\"\\]|\\.)*\"|[\w.]+)"
_DOT_ATTR = re.compile(r"(\w+)\s*=\s*(\"(?:[^\"\\]|\\.)*\"|[\w.]+)")


def _unquote(tok: str) -> str:
    if tok.startswith('"'):
        return tok[1:-1].replace('\\"', '"')
    return tok


def _parse_dot(text: str) -> _Parsed:
    out = _Parsed()
    head = _DOT_HEAD.match(text)
    if not head:
        raise GraphInputError("DOT input must start with 'graph {' or 'digraph {'", 1)
    directed_graph = head.group(2) == "digraph"
    close = text.rfind("}")
    if close < head.end():
        raise GraphInputError("unterminated DOT body")
    body = text[head.end():close]
    base_line = text[: head.end()].count("\n") + 1
    names: dict[str, int] = {}
    node_labels: dict[str, str] = {}
    raw_edges = []
    offset = 0
    for stmt in re.split(r"[;\n]", body):
        lineno = base_line + body[:offset].count("\n")
        offset += len(stmt) + 1
        stmt = stmt.strip()
        if not stmt or stmt.startswith("//") or stmt.startswith("#"):
            continue
        attrs = {}
        m = re.search(r"\[(.*)\]\s*$", stmt)
        if m:
            attrs = {k: _unquote(v) for k, v in _DOT_ATTR.findall(m.group(1))}
            stmt = stmt[: m.start()].strip()
        if stmt.split()[0] in ("graph", "node", "edge") and not re.search(r"--|->", stmt):
            continue
        parts = re.split(r"\s*(--|->)\s*", stmt)
        ids = parts[::2]
        ops = parts[1::2]
        for tok in ids:
            if not re.fullmatch(_DOT_ID, tok):
                raise GraphInputError(f"bad DOT identifier {tok!r}", lineno)
            names.setdefault(_unquote(tok), len(names))
        if not ops:
            if "label" in attrs:
                node_labels[_unquote(ids[0])] = attrs["label"]
            continue
        for k, op in enumerate(ops):
            a, b = _unquote(ids[k]), _unquote(ids[k + 1])
            if op == "->" and not directed_graph:
                raise GraphInputError("'->' used in an undirected graph", lineno)
            if op == "--" and directed_graph:
                raise GraphInputError("'--' used in a digraph", lineno)
            undirected = op == "--" or attrs.get("dir") == "none"
            raw_edges.append((a, b, undirected, lineno))
    if all(re.fullmatch(r"\d+", k) for k in names):
        index = {k: int(k) for k in names}
        out.n = max(index.values(), default=-1) + 1
        out.labels = {index[k]: lab for k, lab in node_labels.items()}
    else:
        index = names
        out.n = len(names)
        out.labels = {i: node_labels.get(k, k) for k, i in names.items()}
    for a, b, undirected, lineno in raw_edges:
        ia, ib = index[a], index[b]
        if ia == ib:
            raise GraphInputError(f"self-loop at node {a}", lineno)
        if undirected:
            out.edges.append((ia, ib))
            out.edge_lines.append(lineno)
        else:
            out.arcs.append((ia, ib))
            out.arc_lines.append(lineno)
    if directed_graph:
        out.flags.add("directed")
    return out


def _parse_json(text: str) -> _Parsed:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj:
        raise GraphInputError("JSON graph must be an object with key 'n'")
    out = _Parsed()
    try:
        out.n = int(obj["n"])
        out.edges = [(int(a), int(b)) for a, b in obj.get("edges", [])]
        out.arcs = [(int(a), int(b)) for a, b in obj.get("arcs", [])]
        out.labels = {int(k): str(v) for k, v in (obj.get("labels") or {}).items()}
    except (TypeError, ValueError):
        raise GraphInputError("malformed JSON graph fields") from None
    if obj.get("poset"):
        out.flags.add("poset")
    if obj.get("arcs") is not None and "edges" not in obj:
        out.flags.add("directed")
    return out


def _parse(text: str, fmt: str) -> _Parsed:
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "dot":
        return _parse_dot(text)
    if fmt == "json":
        return _parse_json(text)
    raise GraphInputError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def _duplicate_check(pairs, lines, directed):
    seen = {}
    for k, (a, b) in enumerate(pairs):
        key = (a, b) if directed else (min(a, b), max(a, b))
        if key in seen:
            raise GraphInputError(f"duplicate {'arc' if directed else 'edge'} {a} {b}", lines[k] if k < len(lines) else None)
        seen[key] = k


def parse_graph(text: str, fmt: str = "edgelist") -> UndirectedGraph:
    p = _parse(text, fmt)
    if p.arcs:
        raise GraphInputError("expected an undirected graph but found directed arcs")
    _duplicate_check(p.edges, p.edge_lines, False)
    return UndirectedGraph(p.n, p.edges, p.labels or None)


def parse_dag(text: str, fmt: str = "edgelist") -> Dag:
    p = _parse(text, fmt)
    if p.edges:
        raise GraphInputError("expected a DAG but found undirected edges")
    _duplicate_check(p.arcs, p.arc_lines, True)
    return Dag(p.n, p.arcs, p.labels or None)


def parse_poset(text: str, fmt: str = "edgelist") -> Poset:
    return Poset.from_dag(parse_dag(text, fmt))


def parse_mixed(text: str, fmt: str = "edgelist") -> MixedGraph:
    p = _parse(text, fmt)
    return MixedGraph(p.n, p.arcs, p.edges, p.labels or None)


def _labels_of(g):
    return dict(sorted(g.labels.items())) if g.labels else {}


def _parts(obj):
    """(n, edges, arcs, labels, flags) for any graph value."""
    if isinstance(obj, UndirectedGraph):
        return obj.n, obj.edges, [], _labels_of(obj), ()
    if isinstance(obj, Poset):
        r = obj.reduction
        return r.n, [], r.arcs, _labels_of(r), ("poset",)
    if isinstance(obj, Dag):
        return obj.n, [], obj.arcs, _labels_of(obj), ("directed",)
    if isinstance(obj, MixedGraph):
        return obj.n, sorted(obj.undirected), sorted(obj.directed), _labels_of(obj), ("mixed",)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def to_edgelist(obj) -> str:
    n, edges, arcs, labels, flags = _parts(obj)
    lines = [f"# {f}=true" for f in flags]
    lines += [f"# name={k}:{v}" for k, v in labels.items()]
    lines.append(f"{n} {len(edges) + len(arcs)}")
    if "mixed" in flags:
        lines += [f"{a} -> {b}" for a, b in arcs]
        lines += [f"{a} -- {b}" for a, b in edges]
    else:
        lines += [f"{a} {b}" for a, b in edges + arcs]
    return "\n".join(lines) + "\n"


def _dot_label(s: str) -> str:
    return '"' + s.replace('"', '\\"') + '"'


def to_dot(obj, name: str = "G") -> str:
    """Undirected graphs use ``graph``/``--``; everything else ``digraph``/``->``.

    Undirected edges of a mixed graph are written ``->`` with ``dir=none``.
    """
    n, edges, arcs, labels, flags = _parts(obj)
    directed = bool(flags)
    lines = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(n):
        if v in labels:
            lines.append(f"  {v} [label={_dot_label(labels[v])}];")
        else:
            lines.append(f"  {v};")
    for a, b in arcs:
        lines.append(f"  {a} -> {b};")
    for a, b in edges:
        lines.append(f"  {a} -> {b} [dir=none];" if directed else f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(obj) -> dict:
    n, edges, arcs, labels, flags = _parts(obj)
    out = {"n": n}
    if isinstance(obj, (UndirectedGraph, MixedGraph)):
        out["edges"] = [list(e) for e in edges]
    if not isinstance(obj, UndirectedGraph):
        out["arcs"] = [list(a) for a in arcs]
    if labels:
        out["labels"] = {str(k): v for k, v in labels.items()}
    if "poset" in flags:
        out["poset"] = True
    return out


def to_json(obj) -> str:
    return json.dumps(to_json_obj(obj))


def emit(obj, fmt: str = "edgelist") -> str:
    if fmt == "edgelist":
        return to_edgelist(obj)
    if fmt == "dot":
        return to_dot(obj)
    if fmt == "json":
        return to_json(obj) + "\n"
    raise GraphInputError(f"unknown format {fmt!r}")


def emit_many(objs, fmt: str = "edgelist") -> str:
    """Blank-line separated edge lists, concatenated DOT graphs, or one JSON array."""
    if fmt == "json":
        return json.dumps([to_json_obj(o) for o in objs]) + "\n"
    if fmt == "dot":
        return "".join(to_dot(o, name=f"G{k}") for k, o in enumerate(objs))
    return "\n".join(to_edgelist(o) for o in objs)
