"""Command-line interface.

Subcommands::

    decide <graph>            decide orientability, optionally emit a witness
    verify <graph> <witness>  check a claimed witness
    square <mixed>            undirected (or mixed) square of a mixed graph
    embed <graph>             embed into an orientable square
    reduce <cnf>              compile a monotone NAE3SAT instance to a graph
    extract <map> <witness>   read an assignment off a reduction witness
    gadget                    inspect the clause gadget

Exit codes: 0 yes/success, 1 no/failed verification, 2 usage or format
error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .formats import (
    GraphFormatError,
    graph_to_dot,
    mixed_to_dot,
    parse_graph,
    parse_mixed,
    serialize_graph,
    serialize_mixed,
)
from .graphs import girth, mixed_square, undirected_square
from .reduction import (
    clause_gadget,
    gadget_signature_report,
    build_reduction,
    parse_dimacs,
    parse_reduction_map,
    serialize_assignment,
    serialize_reduction_map,
    witness_to_assignment,
)
from .solver import (
    BudgetExceeded,
    SolveOptions,
    decide_qt,
    verify_witness,
)
from .structure import decide_deg3, decide_girth4, embed_universal, orient_deg3

EXIT_YES = 0
EXIT_NO = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from None


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mixedqt",
        description="Decide whether a graph is the undirected square of an oriented graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide orientability of a graph")
    p.add_argument("graph")
    p.add_argument("--method", choices=["auto", "exact", "deg3", "girth4"], default="auto")
    p.add_argument("--witness", metavar="FILE", help="write a witness when the answer is yes")
    p.add_argument("--dot", metavar="FILE", help="write the witness in DOT format")
    p.add_argument("--node-limit", type=int, default=None, metavar="N")
    p.add_argument("--threads", type=int, default=1, metavar="N")
    p.add_argument("--seed", type=int, default=None,
                   help="reserved; all methods are deterministic")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="verify a witness against a graph")
    p.add_argument("graph")
    p.add_argument("witness")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("square", help="square a mixed graph")
    p.add_argument("mixed")
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--mixed-output", action="store_true",
                   help="emit the mixed square instead of its underlying graph")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("embed", help="embed a graph into an orientable square")
    p.add_argument("graph")
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--root", metavar="FILE", help="write the oriented root")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce", help="compile a monotone NAE3SAT instance to a graph")
    p.add_argument("cnf")
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--map", dest="map_file", metavar="FILE")
    p.add_argument("--drop-pendants", action="store_true",
                   help="omit gadget pendant edges at literal vertices (max degree 5)")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("extract", help="extract an assignment from a reduction witness")
    p.add_argument("map")
    p.add_argument("witness")
    p.add_argument("-o", "--output", metavar="FILE")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("gadget", help="inspect the clause gadget")
    p.add_argument("--signatures", action="store_true",
                   help="enumerate all orientations and report achievable signatures")
    p.add_argument("-o", "--output", metavar="FILE", help="write the gadget graph")
    p.add_argument("--dot", metavar="FILE")
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_decide(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    method = args.method
    if method == "auto":
        if g.max_degree() <= 3:
            method = "deg3"
        elif girth(g) >= 4:
            method = "girth4"
        else:
            method = "exact"
    opts = SolveOptions(node_limit=args.node_limit, threads=args.threads)
    witness = None
    try:
        if method == "deg3":
            if args.witness or args.dot:
                witness = orient_deg3(g, opts)
                answer = witness is not None
            else:
                answer = decide_deg3(g)
        elif method == "girth4":
            witness = decide_girth4(g)
            answer = witness is not None
        else:
            witness = decide_qt(g, opts)
            answer = witness is not None
    except BudgetExceeded:
        if args.json:
            print(json.dumps({"answer": "BUDGET-EXCEEDED", "method": method,
                              "witness": None}))
        else:
            print("BUDGET-EXCEEDED")
        return EXIT_BUDGET
    if answer and witness is not None:
        if args.witness:
            _write(args.witness, serialize_mixed(witness.mixed))
        if args.dot:
            _write(args.dot, mixed_to_dot(witness.mixed))
    if args.json:
        print(json.dumps({
            "answer": "YES" if answer else "NO",
            "method": method,
            "witness": args.witness if (answer and args.witness) else None,
        }))
    else:
        print("YES" if answer else "NO")
    return EXIT_YES if answer else EXIT_NO


def _cmd_verify(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    m = parse_mixed(_read(args.witness))
    check = verify_witness(g, m)
    if args.json:
        print(json.dumps({"ok": check.ok, "problems": list(check.problems)}))
    elif check.ok:
        print("OK")
    else:
        for line in check.problems:
            print(line)
    return EXIT_YES if check.ok else EXIT_NO


def _cmd_square(args: argparse.Namespace) -> int:
    m = parse_mixed(_read(args.mixed))
    if args.mixed_output:
        sq = mixed_square(m)
        text = serialize_mixed(sq)
        dot = mixed_to_dot(sq)
        summary = {"vertices": sq.n, "edges": len(sq.edges), "arcs": len(sq.arcs)}
    else:
        sq = undirected_square(m)
        text = serialize_graph(sq)
        dot = graph_to_dot(sq)
        summary = {"vertices": sq.n, "edges": len(sq.edges)}
    if args.output:
        _write(args.output, text)
    if args.json:
        print(json.dumps({**summary, "output": args.output}))
    elif not args.output:
        sys.stdout.write(text)
    if args.dot:
        _write(args.dot, dot)
    return EXIT_YES


def _cmd_embed(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.graph))
    square, root = embed_universal(g)
    if args.output:
        _write(args.output, serialize_graph(square))
    if args.root:
        _write(args.root, serialize_mixed(root))
    if args.dot:
        _write(args.dot, graph_to_dot(square))
    if args.json:
        print(json.dumps({
            "vertices": square.n,
            "edges": len(square.edges),
            "root_vertices": root.n,
            "output": args.output,
            "root": args.root,
        }))
    elif not args.output:
        sys.stdout.write(serialize_graph(square))
    return EXIT_YES


def _cmd_reduce(args: argparse.Namespace) -> int:
    instance = parse_dimacs(_read(args.cnf))
    graph, rm = build_reduction(instance, drop_pendants=args.drop_pendants)
    if args.output:
        _write(args.output, serialize_graph(graph))
    if args.map_file:
        _write(args.map_file, serialize_reduction_map(rm))
    if args.dot:
        _write(args.dot, graph_to_dot(graph))
    if args.json:
        print(json.dumps({
            "variables": instance.num_vars,
            "clauses": len(instance.clauses),
            "vertices": graph.n,
            "edges": len(graph.edges),
            "output": args.output,
            "map": args.map_file,
        }))
    elif not args.output:
        sys.stdout.write(serialize_graph(graph))
    return EXIT_YES


def _cmd_extract(args: argparse.Namespace) -> int:
    rm = parse_reduction_map(_read(args.map))
    m = parse_mixed(_read(args.witness))
    f = witness_to_assignment(rm, m)
    text = serialize_assignment(f)
    if args.output:
        _write(args.output, text)
    if args.json:
        print(json.dumps({str(x): int(val) for x, val in sorted(f.items())}))
    elif not args.output:
        sys.stdout.write(text)
    return EXIT_YES


def _cmd_gadget(args: argparse.Namespace) -> int:
    g, literals, pendants = clause_gadget()
    if args.output:
        _write(args.output, serialize_graph(g))
    if args.dot:
        _write(args.dot, graph_to_dot(g))
    if args.signatures:
        report = gadget_signature_report()
        achievable = sorted("".join(sig) for sig in report.signatures)
        if args.json:
            print(json.dumps({
                "achievable": achievable,
                "excluded": ["+++", "---"],
                "excluded_counts": list(report.constant_counts),
                "orientations": report.orientation_count,
            }))
        else:
            for sig in achievable:
                print(sig)
            print(f"excluded: +++ ---; counts: {report.constant_counts[0]} "
                  f"{report.constant_counts[1]}")
        return EXIT_YES
    if args.json:
        print(json.dumps({
            "vertices": g.n,
            "edges": len(g.edges),
            "literals": list(literals),
            "pendants": list(pendants),
        }))
    else:
        print(f"clause gadget: {g.n} vertices, {len(g.edges)} edges; "
              f"literals {literals}, pendants {pendants}")
    return EXIT_YES


_COMMANDS = {
    "decide": _cmd_decide,
    "verify": _cmd_verify,
    "square": _cmd_square,
    "embed": _cmd_embed,
    "reduce": _cmd_reduce,
    "extract": _cmd_extract,
    "gadget": _cmd_gadget,
}


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"BUDGET-EXCEEDED: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
