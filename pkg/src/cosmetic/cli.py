"""Command line entry point: ``cosmetic [--json] <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import (
    CatalogError,
    KnotRecord,
    analyze,
    builtin_table1,
    parse_catalog,
    render,
    table1_summary,
)
from .seifert import PretzelParams, WhiteheadParams


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosmetic",
        description="Seifert matrix obstructions to cosmetic crossings of genus one knots.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("verify-table1", help="check the 23 genus one knots with <= 12 crossings")

    p = sub.add_parser("analyze", help="analyze a catalog file ('-' for stdin)")
    p.add_argument("path")

    p = sub.add_parser("pretzel", help="analyze the pretzel knot P(p,q,r)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("r", type=int)

    p = sub.add_parser("whitehead", help="analyze the n-twisted Whitehead double")
    p.add_argument("clasp", choices=["+", "-"])
    p.add_argument("n", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    # also accept --json after the subcommand
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    argv = [a for a in argv if a != "--json"]
    args = parser.parse_args(argv)
    fmt = "json" if as_json else "text"

    try:
        if args.command == "verify-table1":
            analysis = analyze(builtin_table1())
            summary = table1_summary(analysis)
            if as_json:
                doc = json.loads(render(analysis, "json"))
                doc["table1"] = summary
                sys.stdout.write(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
            else:
                sys.stdout.write(render(analysis, "text"))
                sys.stdout.write(
                    f"square determinants: {', '.join(summary['square_determinant'])}\n"
                    f"obstructed by the determinant test alone: "
                    f"{summary['obstructed_by_determinant']}\n"
                    f"unresolved: {', '.join(summary['unresolved_knots']) or 'none'}\n")
            return 1 if analysis.errors else 0

        if args.command == "analyze":
            if args.path == "-":
                records = parse_catalog(sys.stdin)
            else:
                with open(args.path, encoding="utf-8") as fh:
                    records = parse_catalog(fh)
        elif args.command == "pretzel":
            params = PretzelParams(args.p, args.q, args.r)
            records = [KnotRecord(str(params), params)]
        else:
            params = WhiteheadParams(args.clasp, args.n)
            records = [KnotRecord(str(params), params)]
    except (CatalogError, ValueError, OSError) as e:
        print(f"cosmetic: error: {e}", file=sys.stderr)
        return 2

    analysis = analyze(records)
    sys.stdout.write(render(analysis, fmt))
    for err in analysis.errors:
        print(f"cosmetic: {err.knot}: {err.message}", file=sys.stderr)
    return 1 if analysis.errors else 0


if __name__ == "__main__":
    raise SystemExit(main())
