"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 the input could not
be parsed, 3 the input parsed but is mathematically invalid.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MultisymError
from .indexing import Context
from .partitions import MultiPartition, MultiPartitionParseError, parse_levels, require_valid, staircase
from .schur import schur, vandermonde_product
from .symfun import monomial_symmetric
from .verify import SUITES

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2, 3


class _ParseError(Exception):
    pass


def _context_args(p: argparse.ArgumentParser):
    p.add_argument("-m", type=int, required=True, help="number of rows")
    p.add_argument("-n", type=int, required=True, help="range of each tensor index")
    p.add_argument("-k", type=int, required=True, help="maximum index depth")


def _format_args(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--alias", action="store_true", help="use X/Y/Z names for depths 0-2")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="multisym", description="Multi-indicial symmetric polynomials.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schur", help="Schur quotient of a multi-partition")
    _context_args(p)
    p.add_argument("--ell", required=True, help='multi-partition, e.g. "[[3,2],[2,1,1,1]]"')
    _format_args(p)

    p = sub.add_parser("vandermonde", help="expanded Vandermonde determinant of a context")
    _context_args(p)
    _format_args(p)

    p = sub.add_parser("msym", help="monomial symmetric function of a multi-partition")
    _context_args(p)
    p.add_argument("--mp", required=True, help='multi-partition, e.g. "[[1],[1,1]]"')
    _format_args(p)

    p = sub.add_parser("delta", help="staircase exponents in flat order")
    _context_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("universe", help="variables of a context in flat order")
    _context_args(p)
    p.add_argument("--alias", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-r", type=int, default=None)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--report", help="also write the JSON report to this file")
    return ap


def _multipartition(ctx: Context, text: str) -> MultiPartition:
    try:
        levels = parse_levels(text)
    except MultiPartitionParseError as exc:
        raise _ParseError(str(exc)) from exc
    return require_valid(MultiPartition.from_levels(ctx, levels))


def _render(poly, args) -> str:
    if args.format == "json":
        return poly.to_json().rstrip("\n")
    return poly.to_text(alias=args.alias)


def _run_verify(args, out) -> int:
    kwargs = {}
    if args.suite == "dims":
        kwargs = {"max_r": 12 if args.max_r is None else args.max_r, "max_n": 5 if args.max_n is None else args.max_n}
    elif args.suite == "projections":
        kwargs = {"seed": args.seed}
        if args.max_r is not None:
            kwargs["max_r"] = args.max_r
    elif args.suite == "counting" and args.max_n is not None:
        kwargs = {"max_n": args.max_n}
    elif args.suite == "schur-stability":
        if args.max_r is not None:
            kwargs["max_weight"] = args.max_r
        if args.max_n is not None:
            kwargs["max_n"] = args.max_n
    rows = SUITES[args.suite](**kwargs)
    failed = [r for r in rows if not r["pass"]]
    report = {"suite": args.suite, "pass": not failed, "checked": len(rows), "failed": len(failed), "rows": rows}
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=1, sort_keys=True)
            fh.write("\n")
    if args.format == "json":
        print(json.dumps(report, sort_keys=True), file=out)
    else:
        for r in rows:
            name = r.get("check") or "{kind} ({m},{n},{k}) r={r}".format(**r)
            detail = r.get("detail") or "threshold={threshold} dim_source={dim_source} dim_target={dim_target}".format(**r)
            print(f"{'PASS' if r['pass'] else 'FAIL'}  {name}  {detail}", file=out)
        print(f"{args.suite}: {len(rows) - len(failed)}/{len(rows)} checks passed", file=out)
    return EXIT_OK if not failed else EXIT_FAILED


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify(args, out)
        ctx = Context(args.m, args.n, args.k)
        if args.command == "schur":
            print(_render(schur(_multipartition(ctx, args.ell)), args), file=out)
        elif args.command == "vandermonde":
            print(_render(vandermonde_product(ctx), args), file=out)
        elif args.command == "msym":
            print(_render(monomial_symmetric(_multipartition(ctx, args.mp)), args), file=out)
        elif args.command == "delta":
            values = staircase(ctx).values
            print(json.dumps(list(values)) if args.format == "json" else ",".join(map(str, values)), file=out)
        elif args.command == "universe":
            labels = ctx.labels
            names = [lab.alias() if args.alias else lab.text() for lab in labels]
            print(json.dumps(names) if args.format == "json" else " ".join(names), file=out)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MultisymError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
