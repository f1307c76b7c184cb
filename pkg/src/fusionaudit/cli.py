"""Command-line driver.

Subcommands:
  verify   build the order-128 counterexample and check all six claims
  scan     run the three conjecture scans on a built-in or file group
  table    print a character table (dixon / constructive / both)

Group selectors are `builtin:<name>` (g128, q8, h16) or `file:<path>`.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Optional, Tuple

from . import audit, groupfile
from .construction import ConstructedGroup
from .groups import DEFAULT_ORDER_CAP, FiniteGroup


def _resolve_group(spec: str, max_order: int) -> Tuple[str, FiniteGroup,
                                                        Optional[ConstructedGroup]]:
    if spec.startswith("builtin:"):
        G, cg = audit.builtin_group(spec.split(":", 1)[1])
        return spec, G, cg
    if spec.startswith("file:"):
        path = spec.split(":", 1)[1]
        G = groupfile.load_group_file(path, max_order=max_order)
        return spec, G, None
    raise ValueError(f"group spec must be builtin:<name> or file:<path>, got {spec!r}")


def _emit(report: audit.AuditReport, fmt: str, out: Optional[str]) -> None:
    text = report.to_json() if fmt == "json" else report.to_text()
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusion-audit",
        description="Exact character-theory audit of fusion-rule positivity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--group", default="builtin:g128",
                       help="builtin:<g128|q8|h16> or file:<path>")
        p.add_argument("--report", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the report to a file")
        p.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP,
                       help="size cap for loaded groups (default 1024)")

    p_verify = sub.add_parser("verify", help="run the six-claim pipeline")
    common(p_verify)
    p_verify.add_argument("--all-lambdas", action="store_true",
                          help="repeat the pipeline for every valid covector")

    p_scan = sub.add_parser("scan", help="run the three conjecture scans")
    common(p_scan)

    p_table = sub.add_parser("table", help="print a character table")
    common(p_table)
    p_table.add_argument("--table-method",
                         choices=("dixon", "constructive", "both"),
                         default="dixon")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        if args.command == "verify":
            if not args.group.startswith("builtin:g128"):
                parser.error("verify applies to the construction; use --group builtin:g128")
            _, _, cg = _resolve_group(args.group, args.max_order)
            report = (audit.verify_all_lambdas(cg) if args.all_lambdas
                      else audit.verify_claims(cg=cg))
        elif args.command == "scan":
            label, G, _ = _resolve_group(args.group, args.max_order)
            report = audit.scan_report(label, G, size_cap=args.max_order)
        else:
            label, G, cg = _resolve_group(args.group, args.max_order)
            report = audit.table_report(label, G, method=args.table_method,
                                        cg=cg, size_cap=args.max_order)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.report, args.out)
    print(f"elapsed: {time.monotonic() - t0:.2f}s", file=sys.stderr)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
