"""Command-line front end.

Exit codes: 0 success, 1 a claim was falsified, 2 usage error.
Running with no arguments is ``verify --small 8 --large 100``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import verify
from .convexity import classify, enumerate_convex
from .graph_core import DomainError, square_cycle
from .treecount import (
    ENUMERATE_MAX_N,
    PartitionFailure,
    count_formula,
    count_matrix_tree,
    decompose,
    enumerate_spanning_trees,
)

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj))


def cmd_count(args: argparse.Namespace) -> int:
    n = args.n
    if n < 5:
        raise UsageError(f"n must be >= 5, got {n}")
    if args.method in ("enumerate", "decompose") and n > ENUMERATE_MAX_N:
        raise UsageError(f"--method {args.method} supports n <= {ENUMERATE_MAX_N}")
    if args.method == "formula":
        value = count_formula(n)
    elif args.method == "matrix-tree":
        value = count_matrix_tree(square_cycle(n))
    elif args.method == "enumerate":
        value = sum(1 for _ in enumerate_spanning_trees(square_cycle(n)))
    else:
        value = decompose(n).total
    print(value)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    if not 5 <= args.n <= 14:
        raise UsageError(f"classify supports 5 <= n <= 14, got {args.n}")
    entries = []
    status = EXIT_OK
    for g in enumerate_convex(args.n, jobs=args.jobs):
        label = classify(g)
        if label is None:
            status = EXIT_FALSIFIED
        entries.append({"label": label.to_json() if label else None, "edges": g.to_json()})
    _emit({"n": args.n, "subgraphs": entries, "count": len(entries)})
    return status


def cmd_decompose(args: argparse.Namespace) -> int:
    n = args.n
    if not 5 <= n <= ENUMERATE_MAX_N:
        raise UsageError(f"decompose supports 5 <= n <= {ENUMERATE_MAX_N}, got {n}")
    try:
        table = decompose(n)
    except PartitionFailure as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        _emit({"witness": exc.witness})
        return EXIT_FALSIFIED
    if table.total != count_formula(n):
        print("falsified: decomposition total differs from n*F_n^2", file=sys.stderr)
        _emit({"witness": {"n": n, "total": str(table.total), "formula": str(count_formula(n))}})
        return EXIT_FALSIFIED
    _emit(table.to_json())
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        verify.plan(args.small, args.large)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    ok = True
    for i, report in enumerate(verify.run_suite(args.small, args.large, jobs=args.jobs)):
        ok &= report.passed
        if args.format == "csv":
            print(verify.format_csv_row(report, header=(i == 0)))
        else:
            print(report.to_jsonl())
        sys.stdout.flush()
    return EXIT_OK if ok else EXIT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="squarecycle",
        description="Spanning trees and convex subgraphs of square cycles C_n^2.",
    )
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("count", help="number of spanning trees of C_n^2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method",
        choices=("formula", "matrix-tree", "enumerate", "decompose"),
        default="formula",
    )
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("classify", help="all connected spanning convex subgraphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="spanning trees tallied by containing strip")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run the whole verification suite")
    p.add_argument("--small", type=int, default=8, help="upper n for enumeration-backed claims")
    p.add_argument("--large", type=int, default=100, help="upper n for arithmetic claims")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv:
        argv = ["verify"]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
