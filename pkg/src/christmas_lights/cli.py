"""Command line: value, best, table, verify."""

from __future__ import annotations

import argparse
import json
import sys
import time

from .core import ParseError, Position, format_value, parse_position
from .fast import grundy_fast
from .oracle import all_components, playout_check, verify_range
from .strategy import best_line
from .sums import gsum_all, outcome


def analysis_report(position: Position, unicode: bool = False) -> dict:
    values = [grundy_fast(c) for c in position]
    return {
        "components": [
            {"input": c.text, "runs": c.run_notation(), "grundy": format_value(v, unicode)}
            for c, v in zip(position, values)
        ],
        "sum": format_value(gsum_all(values), unicode),
        "outcome": outcome(position).value,
    }


def _print_report(report: dict) -> None:
    for i, comp in enumerate(report["components"]):
        shown = comp["input"] or "(empty)"
        print(f"component {i}: {shown}  runs {comp['runs'] or '-'}  value {comp['grundy']}")
    print(f"sum: {report['sum']}")
    print(f"outcome: {report['outcome']}")


def cmd_value(args) -> int:
    position = parse_position(args.position)
    report = analysis_report(position, args.unicode)
    if args.json:
        print(json.dumps(report))
    else:
        _print_report(report)
    return 0


def cmd_best(args) -> int:
    position = parse_position(args.position)
    report = analysis_report(position, args.unicode)
    line = best_line(position)
    if args.json:
        report["line"] = None if line is None else line.to_json()["line"]
        if line is not None:
            report["final_value"] = format_value(line.final_value)
        print(json.dumps(report))
        return 0
    if line is None:
        print("P-position")
        return 0
    for n, move in enumerate(line.moves, 1):
        print(f"{n}. {move.describe()}")
    print(f"final value: {format_value(line.final_value, args.unicode)}")
    return 0


def cmd_table(args) -> int:
    rows = []
    for comp in all_components(args.len):
        if not comp.text:
            continue
        rows.append((comp.text, comp.run_notation(), format_value(grundy_fast(comp), args.unicode)))
    if args.json:
        print(json.dumps([{"input": a, "runs": b, "grundy": c} for a, b, c in rows]))
    else:
        for row in rows:
            print("\t".join(row))
    return 0


def cmd_verify(args) -> int:
    start = time.perf_counter()
    report = verify_range(args.len)
    out = report.to_json()
    ok = report.ok
    if args.playout is not None:
        if len(args.playout) not in (3, 4):
            raise SystemExit("--playout takes PIECES COMPONENTS SAMPLES [SEED]")
        pieces, components, samples = args.playout[:3]
        seed = args.playout[3] if len(args.playout) == 4 else args.seed
        play = playout_check(pieces, components, samples, seed)
        out["playout"] = {"max_pieces": pieces, "max_components": components,
                          "seed": seed, **play.to_json()}
        ok = ok and play.ok
    out["seconds"] = round(time.perf_counter() - start, 3)
    if args.json:
        print(json.dumps(out))
    else:
        print(f"checked {out['checked']} components up to length {args.len}: "
              f"{len(out['mismatches'])} mismatches")
        for bad in out["mismatches"][:20]:
            print(f"  {bad['input']}: oracle {bad['oracle']}, fast {bad['fast']}")
        print("histogram: " + ", ".join(f"{k}:{v}" for k, v in out["histogram"].items()))
        if "playout" in out:
            p = out["playout"]
            print(f"playout agreement {p['agree']}/{p['samples']}")
            for bad in p["disagreements"][:20]:
                print(f"  {bad['position']}: nim-sum {bad['nim_sum']}, playout {bad['playout']}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xmas-fixture",
        description="Grundy values and winning moves for CHRISTMAS LIGHTS' FIXTURE.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--unicode", action="store_true", help="print the moon as ☾")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[common], help="component values, sum and outcome")
    p.add_argument("position", help='e.g. "bsb + b2s1" or "0"')
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("best", parents=[common], help="a winning turn, if any")
    p.add_argument("position")
    p.set_defaults(func=cmd_best)

    p = sub.add_parser("table", parents=[common], help="values of all short components")
    p.add_argument("--len", type=int, default=3)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="oracle vs fast solver")
    p.add_argument("--len", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--playout", type=int, nargs="+", metavar="N",
                   help="PIECES COMPONENTS SAMPLES [SEED]: playout vs nim-sum check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table" and args.len < 1:
        parser.error("--len must be at least 1")
    if args.command == "verify" and args.len < 0:
        parser.error("--len must be non-negative")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
