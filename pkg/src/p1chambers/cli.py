"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .arith import rat_to_str
from .chambers import (
    OnWall,
    chamber_of,
    chamber_poly,
    enumerate_chambers,
    totally_negative_poly,
    wall_crossing_poly,
)
from .invariants import DomainError, LatticePoint, descendant_value, f_graph_oracle, f_value
from .poly import MultiPoly, default_names
from .verify import run_all

SCHEMA = 1

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma separated list of integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _poly_json(poly: MultiPoly) -> dict:
    return {
        "variables": default_names(poly.nvars),
        "degree": poly.total_degree(),
        "terms": poly.to_json(),
        "text": poly.to_text(),
    }


def _subset_list(subsets) -> list[list[int]]:
    return [list(I) for I in subsets]


def _location(p: LatticePoint) -> dict:
    where = chamber_of(p)
    if isinstance(where, OnWall):
        return {"on_walls": _subset_list(where.walls)}
    return {"chamber": where.describe()}


# -- commands -------------------------------------------------------------------


def cmd_value(args) -> tuple[dict, int]:
    if any(v < 0 for v in args.x):
        raise UsageError("x entries must be nonnegative")
    if args.y < 1:
        raise UsageError("y must be at least 1")
    notes = []
    xs = sorted(args.x, reverse=True)
    if xs != list(args.x):
        notes.append(f"x reordered to {','.join(map(str, xs))} (F is symmetric in the insertions)")
    p = LatticePoint(tuple(xs), args.y)
    if p.m < 2:
        raise DomainError("need at least two marked points")
    report = {
        "inputs": {"x": xs, "y": args.y},
        "notes": notes,
        "t_exponent": p.t_exponent,
    }
    if not p.in_parameter_space():
        if not args.allow_outside:
            raise DomainError(
                f"point lies outside the parameter space (1 + sum x = {1 + sum(xs)} < y = {args.y}); "
                "pass --allow-outside to report the vanishing value"
            )
        report.update({"F": "0", "vanishes": True})
        return report, EXIT_OK
    value = f_value(p, args.order)
    report.update({"F": rat_to_str(value), "vanishes": False})
    report.update(_location(p))
    code = EXIT_OK
    if args.verify:
        oracle = f_graph_oracle(p)
        report["oracle"] = rat_to_str(oracle)
        report["verified"] = oracle == value
        if oracle != value:
            code = EXIT_MISMATCH
    return report, code


def cmd_chambers(args) -> tuple[dict, int]:
    if args.m < 2:
        raise UsageError("m must be at least 2")
    if args.bound < 1:
        raise UsageError("bound must be at least 1")
    rows = []
    for sig, witness in enumerate_chambers(args.m, args.bound):
        poly = chamber_poly(sig)
        rows.append(
            {
                "signature": sig.describe(),
                "totally_negative": sig.is_totally_negative(),
                "witness": {"x": list(witness.x), "y": witness.y},
                "polynomial": _poly_json(poly),
            }
        )
    report = {
        "inputs": {"m": args.m, "bound": args.bound},
        "count": len(rows),
        "degree_bound": 2 * args.m - 4,
        "chambers": rows,
    }
    return report, EXIT_OK


def cmd_wall(args) -> tuple[dict, int]:
    I = sorted(set(args.I))
    if not 1 <= len(I) <= args.m - 2 or any(i < 1 or i > args.m for i in I):
        raise UsageError(f"need a subset of 1..{args.m} with 1 <= |I| <= {args.m - 2}")
    poly = wall_crossing_poly(args.m, I)
    return {"inputs": {"m": args.m, "I": I}, "wall_crossing": _poly_json(poly)}, EXIT_OK


def cmd_tn(args) -> tuple[dict, int]:
    if args.m < 2:
        raise UsageError("m must be at least 2")
    return {"inputs": {"m": args.m}, "polynomial": _poly_json(totally_negative_poly(args.m))}, EXIT_OK


def cmd_descendant(args) -> tuple[dict, int]:
    if any(v < 0 for v in args.l):
        raise UsageError("descendant orders must be nonnegative")
    d = 1 + sum(args.l)
    value = descendant_value(args.l)
    return {"inputs": {"l": list(args.l), "d": d}, "value": rat_to_str(value)}, EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    if args.m < 2:
        raise UsageError("m must be at least 2")
    if args.xmax < 0 or args.ymax < 1:
        raise UsageError("need xmax >= 0 and ymax >= 1")
    checks = run_all(args.m, args.xmax, args.ymax, args.order)
    total = sum(len(c.mismatches) for c in checks)
    report = {
        "inputs": {"m": args.m, "xmax": args.xmax, "ymax": args.ymax},
        "checks": [c.to_json() for c in checks],
        "mismatches": total,
    }
    return report, EXIT_OK if total == 0 else EXIT_MISMATCH


# -- text rendering -------------------------------------------------------------


def _render_text(command: str, report: dict) -> str:
    lines = [f"note: {n}" for n in report.get("notes", [])]
    if command == "value":
        lines.append(f"F = {report['F']}")
        lines.append(f"t-exponent = {report['t_exponent']}")
        if report.get("vanishes"):
            lines.append("point outside the parameter space: invariant vanishes")
        if "on_walls" in report:
            lines.append("on walls: " + " ".join(_fmt_subset(I) for I in report["on_walls"]))
        if "chamber" in report:
            lines.append("chamber: " + _fmt_sig(report["chamber"]))
        if "oracle" in report:
            lines.append(f"oracle = {report['oracle']}")
            lines.append("OK" if report["verified"] else "MISMATCH")
    elif command == "chambers":
        lines.append(f"{report['count']} chambers (m={report['inputs']['m']}, bound={report['inputs']['bound']})")
        for i, row in enumerate(report["chambers"], 1):
            w = row["witness"]
            tag = " [totally negative]" if row["totally_negative"] else ""
            lines.append(f"[{i}] {_fmt_sig(row['signature'])}{tag}")
            lines.append(f"    witness: x={','.join(map(str, w['x']))} y={w['y']}")
            lines.append(f"    degree {row['polynomial']['degree']}: {row['polynomial']['text']}")
    elif command == "wall":
        I = ",".join(map(str, report["inputs"]["I"]))
        lines.append(f"WC_{{{I}}} = {report['wall_crossing']['text']}")
    elif command == "tn":
        lines.append(f"P_tn = {report['polynomial']['text']}")
    elif command == "descendant":
        lines.append(f"d = {report['inputs']['d']}")
        lines.append(f"value = {report['value']}")
    elif command == "verify":
        for check in report["checks"]:
            status = "ok" if not check["mismatches"] else f"{len(check['mismatches'])} MISMATCHES"
            lines.append(f"{check['name']}: {check['checked']} checked, {status}")
            for mm in check["mismatches"][:20]:
                lines.append(f"    {json.dumps(mm, sort_keys=True)}")
        lines.append(f"total mismatches: {report['mismatches']}")
    return "\n".join(lines)


def _fmt_subset(I) -> str:
    return "{" + ",".join(map(str, I)) + "}"


def _fmt_sig(sig: dict) -> str:
    below = " ".join(_fmt_subset(I) for I in sig["below"]) or "-"
    above = " ".join(_fmt_subset(I) for I in sig["above"]) or "-"
    return f"below y: {below} | above y: {above}"


# -- entry point ----------------------------------------------------------------


COMMANDS = {
    "value": cmd_value,
    "chambers": cmd_chambers,
    "wall": cmd_wall,
    "tn": cmd_tn,
    "descendant": cmd_descendant,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    common.add_argument(
        "--order", type=int, default=argparse.SUPPRESS, metavar="N",
        help="series truncation order (default: extracted power + 2)",
    )

    parser = argparse.ArgumentParser(
        prog="p1chambers",
        description="Genus-0 equivariant relative invariants of P^1: values, chambers, wall crossings.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[common], help="evaluate F at a point")
    p.add_argument("--x", type=_int_list, required=True, help="comma separated x_1,...,x_m")
    p.add_argument("--y", type=int, required=True)
    p.add_argument("--verify", action="store_true", help="also run the localization-graph oracle")
    p.add_argument("--allow-outside", action="store_true", help="report 0 outside the parameter space")

    p = sub.add_parser("chambers", parents=[common], help="list chambers and their polynomials")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--bound", type=int, default=6, help="coordinate bound for the witness search")

    p = sub.add_parser("wall", parents=[common], help="wall-crossing polynomial WC_I")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--I", type=_int_list, required=True, help="comma separated subset")

    p = sub.add_parser("tn", parents=[common], help="totally negative chamber polynomial")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("descendant", parents=[common], help="non-equivariant descendant value")
    p.add_argument("--l", type=_int_list, required=True, help="comma separated l_1,...,l_m")

    p = sub.add_parser("verify", parents=[common], help="cross-check all evaluation paths")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--xmax", type=int, default=3)
    p.add_argument("--ymax", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", False)
    args.order = getattr(args, "order", None)
    try:
        report, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = {"schema": SCHEMA, "command": args.command, **report}
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print(_render_text(args.command, report))
    return code


if __name__ == "__main__":
    sys.exit(main())
