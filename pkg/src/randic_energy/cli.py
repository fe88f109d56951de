"""Command-line front end.

Exit codes: 0 success, 1 mathematical violation, 2 input error,
3 numerical error.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .formats import (GraphParseError, parse_edge_list, parse_graph6_lines,
                      to_edge_list, to_graph6)
from .oracles import MAX_ENUMERATION_N
from .serialize import format_float
from .spectral import graph_spectrum
from .exhaustive import print_violation, sweep
from .verify import EQUALITY_TOL, SLACK_TOL, find_violations, full_report

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3
JOBS_ENV = "RANDIC_ENERGY_JOBS"


class InputError(Exception):
    pass


def _positive_float(text: str) -> float:
    x = float(text)
    if not x > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return x


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randic-energy",
        description="Graph energy vs. Randić index: reports, checks and exhaustive sweeps.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", nargs="?", default="-",
                       help="file path, inline graph6 string, or '-' for stdin (default)")
        p.add_argument("--format", choices=("graph6", "edgelist", "auto"), default="auto")

    def tolerances(p):
        p.add_argument("--tol-slack", type=_positive_float, default=SLACK_TOL)
        p.add_argument("--tol-equality", type=_positive_float, default=EQUALITY_TOL)

    p = sub.add_parser("report", help="descriptor report for each input graph")
    graph_input(p)
    tolerances(p)
    p.add_argument("--output", choices=("json", "table"), default="json")

    p = sub.add_parser("verify", help="check every inequality; exit 1 on a violation")
    graph_input(p)
    tolerances(p)

    p = sub.add_parser("sweep", help="verify all labelled graphs on n vertices")
    p.add_argument("--n", type=int, required=True, dest="sweep_n")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    tolerances(p)

    p = sub.add_parser("convert", help="re-emit graphs in the other format")
    graph_input(p)
    return parser


def read_text(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    # anything else is taken as inline graph6
    return source


def detect_format(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        # digits never occur in graph6 (bytes 63..126)
        return "edgelist" if line.isdigit() else "graph6"
    return "graph6"


def load_graphs(source: str, fmt: str):
    """Return ``(graphs, format_used)``; whitespace-only input gives no graphs."""
    text = read_text(source)
    if fmt == "auto":
        fmt = detect_format(text)
    if not any(line.strip() and not line.strip().startswith("#") for line in text.splitlines()):
        return [], fmt
    try:
        if fmt == "edgelist":
            return [parse_edge_list(text)], fmt
        return parse_graph6_lines(text), fmt
    except GraphParseError as exc:
        raise InputError(str(exc)) from None


TABLE_COLUMNS = ("graph6", "energy", "randic", "gap", "matching_size",
                 "energy_class", "numeric_equality", "structure")


def _table_cell(v) -> str:
    if isinstance(v, float):
        return f"{v:.10f}"
    return str(v)


def cmd_report(args) -> int:
    graphs, _ = load_graphs(args.input, args.format)
    if args.output == "json":
        for g in graphs:
            sys.stdout.write(full_report(g, args.tol_slack, args.tol_equality).to_json())
        return EXIT_OK
    rows = [TABLE_COLUMNS]
    for g in graphs:
        d = full_report(g, args.tol_slack, args.tol_equality).as_flat_dict()
        d["graph6"] = to_graph6(g)
        rows.append(tuple(_table_cell(d[c]) for c in TABLE_COLUMNS))
    widths = [max(len(r[i]) for r in rows) for i in range(len(TABLE_COLUMNS))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_verify(args) -> int:
    graphs, _ = load_graphs(args.input, args.format)
    status = EXIT_OK
    for g in graphs:
        d = graph_spectrum(g)
        rep = full_report(g, args.tol_slack, args.tol_equality, spectrum=d)
        msgs = find_violations(g, args.tol_slack, args.tol_equality, report=rep, spectrum=d)
        for msg in msgs:
            print_violation(msg)
        if msgs:
            status = EXIT_VIOLATION
            verdict = "FAIL"
        else:
            verdict = "ok equality" if rep.numeric_equality else "ok strict"
        print(f"{to_graph6(g)} {verdict} gap={format_float(rep.gap)}")
    return status


def cmd_sweep(args) -> int:
    if not 0 <= args.sweep_n <= MAX_ENUMERATION_N:
        raise InputError(f"--n must lie in 0..{MAX_ENUMERATION_N}, got {args.sweep_n}")
    summary = sweep(args.sweep_n, (args.tol_slack, args.tol_equality),
                    jobs=max(1, args.jobs), on_violation=print_violation)
    sys.stdout.write(summary.to_json())
    return EXIT_OK if summary.ok else EXIT_VIOLATION


def cmd_convert(args) -> int:
    graphs, fmt = load_graphs(args.input, args.format)
    if not graphs:
        raise InputError("no graph to convert")
    if fmt == "edgelist":
        for g in graphs:
            print(to_graph6(g))
    else:
        sys.stdout.write("\n".join(to_edge_list(g) for g in graphs))
    return EXIT_OK


COMMANDS = {"report": cmd_report, "verify": cmd_verify, "sweep": cmd_sweep,
            "convert": cmd_convert}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
