"""Command-line driver.

Subcommands: diagram, strata, quantum, verify, list.  All mathematics
lives in the library modules; this file only parses flags, dispatches,
and formats.  Exit codes: 0 success, 1 validation error, 2 verification
failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional

from . import cosets, decomp, hasse, seidel, strata, verify
from .fixtures import Fixture, FixtureError, parse_fixture, sweep_fixtures
from .rootsys import RootSystemError


def _fixture_from_args(args) -> Fixture:
    missing = [
        name
        for name, value in (
            ("--type", args.type),
            ("--rank", args.rank),
            ("--grassmannian", args.grassmannian),
        )
        if value is None
    ]
    if missing:
        raise FixtureError("missing required flags: %s" % ", ".join(missing))
    p_node = args.cominuscule
    if p_node is None:
        if args.type == "B":
            p_node = 1
        elif args.type == "C":
            p_node = args.rank
        elif args.type == "A":
            p_node = args.grassmannian
        else:
            raise FixtureError("type D needs --cominuscule (one of 1, rank-1, rank)")
    return Fixture(args.type, args.rank, args.grassmannian, p_node)


def _write_output(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_diagram(args) -> int:
    fix = _fixture_from_args(args)
    if args.cominuscule is None:
        _write_output(decomp.emit_plain(fix, args.format), args.out)
        return 0
    dec = decomp.build_decomposition(fix)
    if args.certify == "on" and not dec.all_pass():
        print("error: stratum/flag diagram mismatch in %s" % fix.label, file=sys.stderr)
        return 2
    _write_output(decomp.emit(dec, args.format), args.out)
    return 0


def cmd_strata(args) -> int:
    fix = _fixture_from_args(args)
    pq, sts = strata.stratify(fix)
    payload = {
        "fixture": fix.label,
        "space": fix.space_label,
        "classes": len(pq.elements),
        "strata": [strata.stratum_json(st) for st in sts],
    }
    if args.certify == "on":
        payload["interval_certified"] = all(cosets.certify_interval(st.dc) for st in sts)
    _write_output(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_quantum(args) -> int:
    fix = _fixture_from_args(args)
    rows = seidel.table_rows(fix)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(
            buf, fieldnames=["window", "length", "q_exp", "image_window"], lineterminator="\n"
        )
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps({"fixture": fix.label, "table": rows}, indent=2) + "\n"
    _write_output(text, args.out)
    return 0


def cmd_verify(args) -> int:
    if args.self_test_corrupt:
        payload = verify.corrupted_oracle_selftest()
        _write_output(json.dumps(payload, indent=2) + "\n", args.out)
        return 0 if payload["self_test_corrupt"]["detected"] else 2
    fixture = parse_fixture(args.fixture) if args.fixture else None
    report = verify.run_verify(
        max_a=args.max_rank_a,
        max_b=args.max_rank_b,
        max_c=args.max_rank_c,
        max_d=args.max_rank_d,
        fixture=fixture,
    )
    _write_output(json.dumps(report, indent=2) + "\n", args.out)
    return 0 if report["all_pass"] else 2


def cmd_list(args) -> int:
    fixtures = sweep_fixtures(
        args.max_rank_a, args.max_rank_b, args.max_rank_c, args.max_rank_d
    )
    lines = ["%s  %s" % (fix.label, fix.space_label) for fix in fixtures]
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parorbits",
        description="Parabolic orbit strata, Seidel quantum tables and Hasse "
        "diagram decompositions of classical Grassmannians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_fixture_flags(p):
        p.add_argument("--type", choices=["A", "B", "C", "D"], help="Dynkin type")
        p.add_argument("--rank", type=int, help="rank of the root system")
        p.add_argument(
            "--grassmannian", type=int, help="node of the maximal parabolic defining X"
        )
        p.add_argument(
            "--cominuscule", type=int, help="cominuscule node of the acting parabolic"
        )
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument(
            "--certify", choices=["on", "off"], default="on", help="run certifications"
        )

    p = sub.add_parser("diagram", help="emit the orbit-colored Hasse diagram")
    add_fixture_flags(p)
    p.add_argument("--format", choices=["dot", "tikz", "json"], default="dot")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("strata", help="stratification report (JSON)")
    add_fixture_flags(p)
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("quantum", help="Seidel quantum product table")
    add_fixture_flags(p)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_quantum)

    def add_sweep_flags(p):
        p.add_argument("--max-rank-a", type=int, default=5)
        p.add_argument("--max-rank-b", type=int, default=5)
        p.add_argument("--max-rank-c", type=int, default=5)
        p.add_argument("--max-rank-d", type=int, default=5)
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("verify", help="run every invariant suite over a sweep")
    add_sweep_flags(p)
    p.add_argument("--fixture", help="single fixture, e.g. C,4,2,4 or C4/P2+P4")
    p.add_argument(
        "--self-test-corrupt",
        action="store_true",
        help="negative control: corrupt a stratum and require detection",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="enumerate supported fixtures")
    add_sweep_flags(p)
    p.set_defaults(func=cmd_list)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FixtureError, RootSystemError, cosets.CosetError, strata.StrataError, hasse.HasseError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
