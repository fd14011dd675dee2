"""``mnrules`` command line: expand, oracle, verify, golden.

Exit codes: 0 success, 1 identity or golden failure, 2 usage error,
3 internal inconsistency (oracle routes disagree).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import golden
from .characters import CharacterKind, RouteMismatchError, checked_character, skew_schur
from .harness import (
    RULES,
    ExpansionRecord,
    RuleSelector,
    UsageError,
    expand,
    expand_parts,
    render_poly,
    render_record,
)
from .partitions import Partition, SkewShape
from .verify import SweepConfig, run_sweep


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mnrules", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the expansion of a rule")
    p.add_argument("--rule", required=True, choices=RULES)
    p.add_argument("--mu", "--lambda", dest="mu", type=_partition, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p.add_argument("--unmerged", action="store_true",
                   help="show the three sums separately (sp, oo, oe)")

    p = sub.add_parser("oracle", help="evaluate a character as a Laurent polynomial")
    p.add_argument("--char", required=True)
    p.add_argument("--lambda", "--mu", dest="lam", required=True,
                   help="partition, or outer/inner for skew_schur")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--m", type=int)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("verify", help="run the master-identity sweep")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-r", type=int, default=6)
    p.add_argument("--rules", default="classical,hook,sp,oo,oe,spo")
    p.add_argument("--jobs", type=int, default=None)

    p = sub.add_parser("golden", help="check (default) or rewrite the golden corpus")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--write", action="store_true")
    return parser


def cmd_expand(args) -> int:
    sel = RuleSelector(args.rule, args.mu, args.r, args.n, args.m)
    if args.unmerged:
        parts = expand_parts(sel)
        if parts is None:
            raise UsageError("--unmerged applies to sp, oo and oe only")
        for name in ("additions", "removals", "third"):
            rec = ExpansionRecord(sel, getattr(parts, name))
            print(f"{name}: {render_record(rec, args.format)}")
        return 0
    print(render_record(expand(sel), args.format))
    return 0


def cmd_oracle(args) -> int:
    kind = CharacterKind.from_name(args.char)
    if kind is CharacterKind.SKEW_SCHUR:
        outer, _, inner = args.lam.partition("/")
        if args.m is None:
            raise UsageError("skew_schur is evaluated in y-variables; give --m")
        poly = skew_schur(SkewShape(Partition.parse(outer), Partition.parse(inner)), args.m)
    else:
        lam = Partition.parse(args.lam)
        if kind.uses_y and args.m is None:
            raise UsageError(f"{kind.value} needs --m")
        if not kind.uses_y and args.m is not None:
            raise UsageError(f"--m is not meaningful for {kind.value}")
        try:
            poly = checked_character(kind, lam, args.n, args.m or 0)
        except RouteMismatchError as exc:
            print(f"internal inconsistency: {exc}", file=sys.stderr)
            return 3
    print(render_poly(poly, args.format))
    return 0


def cmd_verify(args) -> int:
    rules = tuple(r.strip() for r in args.rules.split(",") if r.strip())
    config = SweepConfig(args.max_size, args.max_n, args.max_m, args.max_r, rules, args.jobs)
    report = run_sweep(config)
    print(report.summary())
    if not report.ok:
        print(json.dumps({"first_failure": report.first_failure}, indent=2))
        return 1
    return 0


def cmd_golden(args) -> int:
    if args.write:
        for path in golden.write(args.out):
            print(f"wrote {path}")
        return 0
    problems = golden.check(args.out)
    if problems:
        for p in problems:
            print(p)
        return 1
    print("golden corpus matches")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"expand": cmd_expand, "oracle": cmd_oracle, "verify": cmd_verify,
               "golden": cmd_golden}[args.command]
    try:
        return handler(args)
    except (UsageError, ValueError) as exc:
        print(f"mnrules {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
