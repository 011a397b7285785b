"""Command-line front end.

Exit codes: 0 success (and, for ``verify`` with the quasi-tree bounds, the
observed exceptions and equality cases match the expected ones), 1 contract
violated or lemma check failed, 2 usage, parse or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections.abc import Sequence

from .enumeration import GraphClass, enumerate_class, quasi_trees_via_trees
from .errors import QtHarmonicError
from .families import build, closed_form, parse_family
from .formats import (
    decode_graph6,
    emit_edge_list,
    encode_graph6,
    looks_like_edge_list,
    parse_edge_list,
    read_graph6_lines,
)
from .graph import Graph, diameter, is_connected, is_quasi_tree, min_degree, quasi_tree_witnesses
from .invariants import QT_BOUNDS, TREE_BOUNDS, UPPER_BOUNDS, CONJ1_BOUNDS, harmonic_index
from .reports import approx, lemma_to_dict, lemma_to_text, rational, report_to_json, report_to_text
from .verify import check_lemma_f, check_lemma_g, sweep, verify_theorems

EXIT_OK, EXIT_CONTRACT, EXIT_USAGE = 0, 1, 2

_BOUND_SETS = {
    "qt": (QT_BOUNDS, GraphClass.QUASI_TREE),
    "conj1": (CONJ1_BOUNDS, GraphClass.CONNECTED),
    "tree": (TREE_BOUNDS, GraphClass.TREE),
    "upper": (UPPER_BOUNDS, GraphClass.CONNECTED),
}


class UsageError(Exception):
    pass


def _order_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _at_least_two(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"grid size must be >= 2, got {value}")
    return value


def _read_graphs(args: argparse.Namespace) -> list[Graph]:
    if getattr(args, "family", None):
        return [build(parse_family(args.family))]
    if getattr(args, "graph6", None):
        return [decode_graph6(args.graph6)]
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input, encoding="ascii") as fh:
            text = fh.read()
    fmt = args.in_format
    if fmt == "auto":
        fmt = "edges" if looks_like_edge_list(text) else "graph6"
    if fmt == "edges":
        return [parse_edge_list(text)]
    graphs = list(read_graph6_lines(text.splitlines()))
    if not graphs:
        raise UsageError("no graphs in input")
    return graphs


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_stats(g: Graph) -> dict:
    if not is_connected(g):
        raise UsageError("input graph is not connected")
    witnesses = quasi_tree_witnesses(g)
    return {
        "graph6": encode_graph6(g),
        "n": g.n,
        "edges": g.edge_count,
        "H": harmonic_index(g) if g.edge_count else None,
        "D": diameter(g),
        "min_degree": min_degree(g),
        "quasi_tree": is_quasi_tree(g),
        "witnesses": witnesses,
    }


def _h_text(H, digits: int) -> str:
    return "undefined (no edges)" if H is None else f"{rational(H)} ({approx(H, digits)})"


def cmd_index(args: argparse.Namespace) -> int:
    stats = [_graph_stats(g) for g in _read_graphs(args)]
    if args.format == "json":
        for s in stats:
            s["H"] = rational(s["H"])
        _write(json.dumps(stats if len(stats) > 1 else stats[0], indent=2) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["graph6", "n", "edges", "H", "H_approx", "D", "min_degree", "quasi_tree", "witnesses"])
        for s in stats:
            H = s["H"]
            writer.writerow([
                s["graph6"], s["n"], s["edges"], rational(H), approx(H, args.decimal)[1:] if H is not None else "",
                s["D"], s["min_degree"], "yes" if s["quasi_tree"] else "no", " ".join(map(str, s["witnesses"])),
            ])
        _write(buf.getvalue(), args.out)
    else:
        blocks = []
        for s in stats:
            h_text = _h_text(s["H"], args.decimal)
            blocks.append(
                "\n".join([
                    f"graph6:     {s['graph6']}",
                    f"n:          {s['n']}",
                    f"edges:      {s['edges']}",
                    f"H:          {h_text}",
                    f"D:          {s['D']}",
                    f"min degree: {s['min_degree']}",
                    f"quasi-tree: {'yes' if s['quasi_tree'] else 'no'}",
                    f"witnesses:  {' '.join(map(str, s['witnesses'])) or '-'}",
                ])
            )
        _write("\n\n".join(blocks) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    lo, hi = args.n
    if args.bounds == "qt":
        report = verify_theorems(lo, hi, jobs=args.jobs)
    else:
        bounds, cls = _BOUND_SETS[args.bounds]
        cap = 11 if cls is GraphClass.TREE else 8
        if not 2 <= lo <= hi <= cap:
            raise UsageError(f"--bounds {args.bounds} supports orders 2..{cap}")
        report = sweep(lo, hi, bounds, cls, mode=args.bounds, jobs=args.jobs)
    if args.format == "json":
        text = report_to_json(report, include_timing=args.timings)
    else:
        text = report_to_text(report, include_timing=args.timings, digits=args.decimal)
    _write(text, args.out)
    if report.contract_satisfied is False:
        return EXIT_CONTRACT
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    cls = GraphClass(args.cls)
    if args.method == "via-trees":
        if cls is not GraphClass.QUASI_TREE:
            raise UsageError("--method via-trees only applies to --class quasi-tree")
        graphs = quasi_trees_via_trees(args.n)
    else:
        graphs = enumerate_class(args.n, cls)
    _write("".join(encode_graph6(g) + "\n" for g in graphs), args.out)
    return EXIT_OK


def cmd_lemmas(args: argparse.Namespace) -> int:
    results = [
        check_lemma_f(args.fx, args.fy, max_denominator=args.denominator),
        check_lemma_g(args.gx, max_denominator=args.denominator),
    ]
    if args.format == "json":
        _write(json.dumps([lemma_to_dict(r) for r in results], indent=2) + "\n", args.out)
    else:
        _write("".join(lemma_to_text(r, args.decimal) + "\n" for r in results), args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_CONTRACT


def cmd_family(args: argparse.Namespace) -> int:
    spec = parse_family(args.spec)
    g = build(spec)
    if args.format == "graph6":
        _write(encode_graph6(g) + "\n", args.out)
        return EXIT_OK
    if args.format == "edges":
        _write(emit_edge_list(g), args.out)
        return EXIT_OK
    s = _graph_stats(g)
    lines = [
        f"family:     {spec}",
        f"graph6:     {s['graph6']}",
        f"n:          {s['n']}",
        f"edges:      {s['edges']}",
        f"H:          {_h_text(s['H'], args.decimal)}",
        f"D:          {s['D']}",
    ]
    try:
        H, D = closed_form(spec)
        lines.append(f"closed form: H = {rational(H)}, D = {D}")
    except QtHarmonicError:
        lines.append("closed form: -")
    lines.append("edge list:  " + " ".join(f"{u}-{v}" for u, v in g.edges()))
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_convert(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args)
    if args.to == "graph6":
        _write("".join(encode_graph6(g) + "\n" for g in graphs), args.out)
    else:
        _write("\n".join(emit_edge_list(g) for g in graphs), args.out)
    return EXIT_OK


def _add_input(p: argparse.ArgumentParser, allow_family: bool = True) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("input", nargs="?", help="graph6 or edge-list file ('-' or omitted: stdin)")
    if allow_family:
        src.add_argument("--family", help='named family, e.g. "V(1,1)", "U(8)", "K4-"')
    src.add_argument("--graph6", help="a single graph6 record")
    p.add_argument("--in-format", choices=["auto", "graph6", "edges"], default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtharmonic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--decimal", type=int, default=6, metavar="K", help="digits in approximate decimals")

    p = sub.add_parser("index", help="harmonic index, diameter and quasi-tree structure of graphs")
    _add_input(p)
    common(p, ["text", "json", "csv"])
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("verify", help="exhaustive bound sweep over enumerated graphs")
    p.add_argument("--n", type=_order_range, default=(3, 8), metavar="LO..HI")
    p.add_argument("--bounds", choices=sorted(_BOUND_SETS), default="qt")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--timings", action="store_true", help="include wall time (output no longer reproducible)")
    common(p, ["text", "json"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="graph6 stream, one graph per isomorphism class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=[c.value for c in GraphClass], default="quasi-tree")
    p.add_argument("--method", choices=["grow", "via-trees"], default="grow")
    p.add_argument("--out")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("lemmas", help="exact grid checks of the auxiliary inequalities")
    p.add_argument("--fx", type=_at_least_two, default=100)
    p.add_argument("--fy", type=_at_least_two, default=100)
    p.add_argument("--gx", type=_at_least_two, default=1000)
    p.add_argument("--denominator", type=int, default=1, help="also test rationals with this max denominator")
    common(p, ["text", "json"])
    p.set_defaults(func=cmd_lemmas)

    p = sub.add_parser("family", help="build and print a named family member")
    p.add_argument("spec")
    common(p, ["text", "graph6", "edges"])
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("convert", help="transcode between graph6 and edge lists")
    _add_input(p, allow_family=False)
    p.add_argument("--to", choices=["graph6", "edges"], required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QtHarmonicError, UsageError, OSError) as exc:
        print(f"qtharmonic {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
