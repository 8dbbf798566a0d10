"""Command line entry point.

Exit codes: 0 success, 1 negative answer (no faithful DAG, not unique,
infeasible budget, failed check), 2 usage or input error, 3 size limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import islice

from . import census, enumeration, io, latent, oracle, posets, recognition
from .exceptions import CapacityError, GraphInputError, NotSMIGError, NotTriviallyPerfectError
from .graphs import simplex_decomposition

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _sniff(text: str) -> str:
    head = text.lstrip()
    if head.startswith("{"):
        return "json"
    if head.startswith(("graph", "digraph", "strict")):
        return "dot"
    return "edgelist"


def _read(args) -> tuple[str, str]:
    path = args.input
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    fmt = args.input_format
    if fmt is None:
        if path and path.endswith(".dot"):
            fmt = "dot"
        elif path and path.endswith(".json"):
            fmt = "json"
        else:
            fmt = _sniff(text)
    return text, fmt


def _graph(args):
    text, fmt = _read(args)
    return io.parse_graph(text, fmt)


def _names(g, nodes) -> list[str]:
    return [g.label(v) for v in sorted(nodes)]


def cmd_recognize(args, out):
    g = _graph(args)
    witness = recognition.smig_witness(g)
    if witness is not None:
        a, b = witness
        if args.format == "json":
            out.write(json.dumps({"smig": False, "witness": [a, b]}) + "\n")
        else:
            out.write(f"not a SMIG: edge {g.label(a)} {g.label(b)} lies in no simplex\n")
        return EXIT_NO
    dec = simplex_decomposition(g)
    if args.format == "json":
        out.write(json.dumps({
            "smig": True,
            "simplexes": [sorted(s) for s in dec.simplexes],
            "simplicial": [sorted(s) for s in dec.simplicial_nodes],
        }) + "\n")
    else:
        out.write(f"SMIG with {len(dec)} simplexes\n")
        for s, t in zip(dec.simplexes, dec.simplicial_nodes):
            out.write(f"simplex {' '.join(_names(g, s))} simplicial {' '.join(_names(g, t))}\n")
    return EXIT_OK


def cmd_sink_graph(args, out):
    g = _graph(args)
    out.write(io.emit(recognition.sink_graph(g), args.format))
    return EXIT_OK


def _emit_pattern(p, fmt) -> str:
    if fmt == "json":
        return json.dumps({
            "n": p.base.n,
            "arcs": [list(a) for a in p.base.arcs],
            "optional": [list(a) for a in p.optional],
            "selection": list(p.selection),
        })
    if fmt == "dot":
        body = io.to_dot(p.base).rstrip().rstrip("}")
        body += "".join(f"  {a} -> {b} [style=dashed];\n" for a, b in p.optional)
        return body + "}\n"
    text = io.to_edgelist(p.base)
    return "".join(f"# optional={a} {b}\n" for a, b in p.optional) + text


def cmd_enumerate(args, out):
    g = _graph(args)
    mode = args.mode
    if mode == "posets":
        items = enumeration.faithful_posets(g)
    elif mode == "dags":
        items = enumeration.faithful_dags(g)
    elif mode == "patterns":
        items = enumeration.faithful_dag_patterns(g)
    elif mode == "minimal":
        items = (m.poset for m in enumeration.minimal_posets(g))
    else:
        items = enumeration.sink_orientations(g)
    if args.limit is not None:
        items = islice(items, args.limit)
    if args.count_only:
        out.write(f"{sum(1 for _ in items)}\n")
        return EXIT_OK
    items = list(items)
    if mode == "patterns":
        if args.format == "json":
            out.write("[" + ", ".join(_emit_pattern(p, "json") for p in items) + "]\n")
        else:
            sep = "" if args.format == "dot" else "\n"
            out.write(sep.join(_emit_pattern(p, args.format) for p in items))
    else:
        out.write(io.emit_many(items, args.format))
    return EXIT_OK


def cmd_tree(args, out):
    g = _graph(args)
    out.write(io.emit(enumeration.tree_poset(g), args.format))
    return EXIT_OK


def cmd_unique(args, out):
    g = _graph(args)
    if recognition.has_unique_faithful_dag(g):
        out.write("unique\n")
        out.write(io.emit(next(enumeration.faithful_dags(g)), args.format))
        return EXIT_OK
    out.write("not unique\n")
    return EXIT_NO


def cmd_embed(args, out):
    g = _graph(args)
    big, dag = recognition.embed_as_induced_smig(g)
    out.write(io.emit_many([big, dag], args.format))
    return EXIT_OK


def cmd_latent(args, out):
    g = _graph(args)
    if args.mode == "oracle":
        limit = args.budget if args.budget is not None else g.m
        res = latent.min_auxiliary_bruteforce(g, limit)
        if res is None:
            out.write(json.dumps({"feasible": False, "budget": limit}) + "\n")
            return EXIT_NO
    else:
        res = latent.min_auxiliary_dag(g, args.mode, args.budget)
        if res is None:
            out.write(json.dumps({"feasible": False, "budget": args.budget}) + "\n")
            return EXIT_NO
    aux = sorted(res.auxiliary)
    out.write(json.dumps({
        "feasible": True,
        "observed": g.n,
        "auxiliary": len(aux),
        "cliques": [sorted(c) for c in res.cover.cliques] if res.cover else [],
        "arcs": [list(a) for a in res.dag.arcs],
        "labels": {str(v): res.dag.label(v) for v in range(res.dag.n)},
        "minimal": "proven" if res.proven_minimal else "upper bound",
    }) + "\n")
    return EXIT_OK


def cmd_census(args, out):
    if args.table1:
        rows = census.table1(args.n, args.allow_expensive)
        headers = ("n", "connected graphs", "conn. SMIGs", "unique DAG")
        keys = ("n", "graphs", "smigs", "unique_dag")
    else:
        rows = census.table2(args.n, args.allow_expensive)
        headers = ("n", "posets with n nodes", "faithful to C_n")
        keys = ("n", "posets", "faithful_complete")
    if args.format == "json":
        out.write(json.dumps([dict(zip(keys, r)) for r in rows]) + "\n")
    else:
        out.write(census.render_table(headers, rows))
    return EXIT_OK


def cmd_oracle(args, out):
    checks = {
        "enumeration": oracle.check_enumeration,
        "recognition": oracle.check_recognition,
        "maximality": oracle.check_maximality,
    }
    if args.n > oracle.MAX_NODES:
        raise CapacityError(f"oracle checks limited to n <= {oracle.MAX_NODES}")
    failed = False
    for n in range(1, args.n + 1):
        bad = checks[args.check](n)
        out.write(f"{args.check} n={n}: {'PASS' if not bad else 'FAIL'}\n")
        for line in bad:
            out.write(f"  counterexample {line}\n")
        failed |= bool(bad)
    return EXIT_NO if failed else EXIT_OK


def cmd_mig(args, out):
    text, fmt = _read(args)
    dag = io.parse_dag(text, fmt)
    out.write(io.emit(posets.marginal_independence_graph(dag), args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1, help="accepted; output is identical for any value")
    common.add_argument("--seed", type=int, default=None, help="reserved; no command is randomised")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("input", nargs="?", help="graph file (default: standard input)")
    graph_in.add_argument("--input-format", choices=io.FORMATS, default=None)

    def emitter(p, default="edgelist"):
        p.add_argument("--format", choices=io.FORMATS, default=default)

    parser = _Parser(prog="smig", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("recognize", parents=[common, graph_in], help="decide whether a faithful DAG exists")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("sink-graph", parents=[common, graph_in], help="mixed sink graph")
    emitter(p, "dot")
    p.set_defaults(func=cmd_sink_graph)

    p = sub.add_parser("enumerate", parents=[common, graph_in], help="list faithful posets or DAGs")
    p.add_argument("--mode", choices=("posets", "dags", "patterns", "minimal", "maximal"), default="posets")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--count-only", action="store_true")
    emitter(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tree", parents=[common, graph_in], help="tree poset of a trivially perfect graph")
    emitter(p)
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("unique", parents=[common, graph_in], help="test for a unique faithful DAG")
    emitter(p)
    p.set_defaults(func=cmd_unique)

    p = sub.add_parser("embed", parents=[common, graph_in], help="embed as an induced subgraph of a SMIG")
    emitter(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("latent", parents=[common, graph_in], help="faithful DAG with auxiliary nodes")
    p.add_argument("--mode", choices=("exact", "greedy", "oracle"), default="exact")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_latent)

    p = sub.add_parser("census", parents=[common], help="reproduce the graph and poset count tables")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--table1", action="store_true")
    which.add_argument("--table2", action="store_true")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--allow-expensive", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("oracle", parents=[common], help="run exhaustive cross-checks")
    p.add_argument("--check", choices=("enumeration", "recognition", "maximality"), required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("mig", parents=[common, graph_in], help="marginal independence graph of a DAG")
    emitter(p)
    p.set_defaults(func=cmd_mig)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (NotSMIGError, NotTriviallyPerfectError) as exc:
        err.write(f"smig: {exc}\n")
        return EXIT_NO
    except GraphInputError as exc:
        err.write(f"smig: {exc}\n")
        return EXIT_INPUT
    except CapacityError as exc:
        err.write(f"smig: {exc}\n")
        return EXIT_CAPACITY


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
