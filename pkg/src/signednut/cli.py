"""Command-line front end.

One binary with subcommands; data goes to stdout, diagnostics to stderr.
Signed records ("graph6 hexmask") stream line by line, so subcommands
compose through pipes, e.g.:

    signednut complete-nut --k 1 | signednut fowler --pivot 0 | signednut classify

Exit codes: 0 clean, 2 on any parse error, 3 when a search was capped.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import gio, linalg
from .classify import classify, positive_representative
from .constructions import complete_nut, fowler
from .graphs import GraphError, SignedGraph
from .search import (
    ALL_WANTS,
    SYMBOL_NOT_ATTEMPTED,
    SearchConfig,
    existence_verdict,
    search_class,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAPPED = 3


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SIGNEDNUT_WORKERS", "1")))
    except ValueError:
        return 1


def _input_lines(path: str | None):
    stream = sys.stdin if path in (None, "-") else open(path)
    with stream if stream is not sys.stdin else _nullcontext(stream) as fh:
        for line in fh:
            line = line.strip()
            if line and not line.startswith("#"):
                yield line


class _nullcontext:
    def __init__(self, value):
        self.value = value

    def __enter__(self):
        return self.value

    def __exit__(self, *exc):
        return False


def _report_text(record: str, report) -> str:
    fields = [
        f"nullity={report.nullity}",
        f"singular={'yes' if report.is_singular else 'no'}",
        f"core={'yes' if report.is_core else 'no'}",
        f"nut={'yes' if report.is_nut else 'no'}",
        f"class={report.signed_class}",
    ]
    if report.kernel_vector is not None:
        fields.append("kernel=(%s)" % ",".join(map(str, report.kernel_vector)))
    return f"{record}\t" + " ".join(fields)


def cmd_classify(args) -> int:
    status = EXIT_OK
    for line in _input_lines(args.input):
        try:
            g = gio.parse_signed(line)
            if args.underlying_only:
                g = g.underlying()
            report = classify(g)
        except (gio.ParseError, GraphError) as exc:
            print(f"error: {line!r}: {exc}", file=sys.stderr)
            status = EXIT_PARSE
            continue
        if args.json:
            print(json.dumps(gio.report_to_dict(report, record=line)))
        else:
            print(_report_text(line, report))
    return status


def cmd_search(args) -> int:
    try:
        graphs = [gio.parse_graph6(line) for line in _input_lines(args.graphs)]
    except gio.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    want = (
        frozenset(args.want.split(",")) if args.want else ALL_WANTS
    )
    cfg = SearchConfig(
        mode=args.mode,
        want=want,
        worker_count=args.workers,
        graph_limit=args.limit,
        signing_limit=args.signing_limit,
        prepass=args.prepass,
    )
    parameters = None
    if args.n is not None and args.rho is not None:
        parameters = (args.n, args.rho)
    outcome = search_class(graphs, cfg, parameters=parameters)
    if args.json:
        print(gio.emit_report(outcome))
    else:
        p = outcome.parameters
        print(f"parameters: n={p[0] if p else '?'} rho={p[1] if p else '?'}")
        print(f"graphs scanned:  {outcome.graphs_scanned}")
        print(f"signings tested: {outcome.signings_tested}")
        print(f"verdict: {outcome.verdict}")
        for witness, report in outcome.witnesses:
            print(_report_text(gio.emit_signed(witness), report))
        for err in outcome.errors:
            print(f"error: {err}", file=sys.stderr)
    return EXIT_CAPPED if outcome.verdict == "capped" else EXIT_OK


def _parse_cells(text: str) -> list[tuple[int, int]]:
    cells = []
    for chunk in text.replace("(", " ").replace(")", " ").split(","):
        chunk = chunk.strip()
        if chunk:
            cells.append(int(chunk))
    if len(cells) % 2:
        raise ValueError("cells must be (rho,n) pairs")
    return [(cells[i], cells[i + 1]) for i in range(0, len(cells), 2)]


def cmd_table(args) -> int:
    try:
        cells = _parse_cells(args.cells)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    verdicts = {}
    for rho, n in cells:
        path = os.path.join(args.fixtures, "reg", str(rho), f"{n}.g6")
        if not os.path.exists(path):
            verdicts[(rho, n)] = SYMBOL_NOT_ATTEMPTED
            continue
        graphs = [gio.parse_graph6(line) for line in _input_lines(path)]
        verdicts[(rho, n)] = existence_verdict(
            n, rho, graphs, worker_count=args.workers
        )
    if args.json:
        print(json.dumps(
            {"schema": gio.SCHEMA_VERSION, "kind": "existence-table",
             "cells": [
                 {"rho": rho, "n": n, "verdict": verdicts[(rho, n)]}
                 for rho, n in cells
             ]}
        ))
        return EXIT_OK
    rhos = sorted({rho for rho, _ in cells})
    ns = sorted({n for _, n in cells})
    width = max(3, max(len(str(n)) for n in ns) + 1)
    print("rho\\n" + "".join(str(n).rjust(width) for n in ns))
    for rho in rhos:
        row = [
            verdicts.get((rho, n), " ").rjust(width) if (rho, n) in verdicts
            else " " * width
            for n in ns
        ]
        print(str(rho).ljust(5) + "".join(row))
    return EXIT_OK


def _single_record(args) -> SignedGraph:
    lines = list(_input_lines(args.input))
    if len(lines) != 1:
        raise gio.ParseError(f"expected exactly one record, got {len(lines)}")
    return gio.parse_signed(lines[0])


def cmd_fowler(args) -> int:
    try:
        g = _single_record(args)
        expansion = fowler(g, args.pivot)
    except (gio.ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(gio.emit_signed(expansion.result))
    return EXIT_OK


def cmd_complete_nut(args) -> int:
    try:
        built = complete_nut(args.k)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(gio.emit_signed(built.result))
    return EXIT_OK


def cmd_switch(args) -> int:
    try:
        g = _single_record(args)
        members = [int(v) for v in args.at.split(",") if v.strip() != ""]
        switched = g.switch(frozenset(members))
    except (gio.ParseError, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(gio.emit_signed(switched))
    return EXIT_OK


def cmd_canonical(args) -> int:
    try:
        g = _single_record(args)
        rep, _ = positive_representative(g)
    except (gio.ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    print(gio.emit_signed(rep))
    return EXIT_OK


def cmd_kernel(args) -> int:
    try:
        g = _single_record(args)
    except (gio.ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    basis = linalg.kernel_basis(g.adjacency_matrix())
    if args.fullify:
        try:
            basis = linalg.fullify_basis(basis)
        except linalg.LinalgError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    for vec in basis.vectors:
        print(" ".join(_format_rational(x) for x in vec))
    return EXIT_OK


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signednut",
        description="Construct, classify and search for signed nut graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify signed records")
    p.add_argument("input", nargs="?", default=None, help="file or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--underlying-only", action="store_true",
                   help="classify the underlying unsigned graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("search", help="search a graph6 catalogue for signed nuts")
    p.add_argument("--graphs", default=None, help="graph6 file (default stdin)")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--rho", type=int, default=None)
    p.add_argument("--mode", default="full-verdict",
                   choices=["first-witness", "count-all", "full-verdict"])
    p.add_argument("--want", default=None,
                   help="comma list of unsigned-nut,traditional-signed-nut,proper-signed-nut")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--limit", type=int, default=None, help="cap on graphs")
    p.add_argument("--signing-limit", type=int, default=None,
                   help="cap on signings per graph")
    p.add_argument("--prepass", action="store_true",
                   help="try heuristic signings before the exhaustive loop")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("table", help="render existence-table cells")
    p.add_argument("--cells", required=True, help='e.g. "(3,8),(3,10),(4,5)"')
    p.add_argument("--fixtures", default="fixtures",
                   help="catalogue directory (contains reg/<rho>/<n>.g6)")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fowler", help="vertex expansion about a pivot")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--pivot", type=int, required=True)
    p.set_defaults(func=cmd_fowler)

    p = sub.add_parser("complete-nut", help="signed nut on the complete graph K(4k+1)")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_complete_nut)

    p = sub.add_parser("switch", help="switch a signed record at a vertex set")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--at", required=True, help='comma list of vertices, "" for none')
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("canonical",
                       help="positive-eigenvector switching representative")
    p.add_argument("input", nargs="?", default=None)
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("kernel", help="print the exact kernel basis")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--fullify", action="store_true",
                   help="rebuild the basis with nowhere-zero vectors")
    p.set_defaults(func=cmd_kernel)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
