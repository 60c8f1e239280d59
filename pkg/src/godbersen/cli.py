"""Command-line front end.

Subcommands:
  gen     write a generated polytope to a JSON file
  verify  Godbersen report for one body (JSON on stdout)
  ak      anchor point of one body, with uniqueness
  helly   subset audit of a halfspace-system file
  moment  directional moment of one body
  sweep   run the corpus checks described in a spec file, write CSV

Exit codes: 0 on success (including reported-but-unproven observations),
1 on usage/input errors, 2 when an exactly-proven statement fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GodbersenError, TheoremViolation
from .generators import KINDS, GenSpec, generate
from .halfspaces import ak_feasibility, helly_audit, fm_feasible
from .inclusion import directional_moment
from .mixedvol import godbersen_report
from .polyio import (
    load_json,
    polytope_from_dict,
    polytope_to_dict,
    report_to_dict,
    save_json,
    system_from_dict,
)
from .rationals import format_rational, parse_rational
from .sweep import sweep


def _load_body(path):
    return polytope_from_dict(load_json(path))


def _cmd_gen(args) -> int:
    spec = GenSpec(kind=args.kind, dim=args.dim, vertex_count=args.vertices,
                   seed=args.seed, denominator_bound=args.denominator_bound)
    body = generate(spec)
    save_json(args.out, polytope_to_dict(body))
    print(f"wrote {args.out}: {len(body.vertices)} vertices, "
          f"{len(body.facets)} facets, volume {format_rational(body.volume)}")
    return 0


def _cmd_verify(args) -> int:
    body = _load_body(args.input)
    report = godbersen_report(body)
    data = report_to_dict(report)
    if args.j is not None:
        data["entries"] = [e for e in data["entries"] if e["j"] == args.j]
        if not data["entries"]:
            print(f"no entry for j={args.j} (valid range 1..{report.n - 1})",
                  file=sys.stderr)
            return 1
    print(json.dumps(data, indent=2))
    return 0


def _cmd_ak(args) -> int:
    body = _load_body(args.input)
    res = ak_feasibility(body)
    print(json.dumps({
        "feasible": res.feasible,
        "witness": [format_rational(c) for c in res.witness],
        "unique": res.unique,
    }, indent=2))
    return 0


def _cmd_helly(args) -> int:
    system = system_from_dict(load_json(args.input))
    ok = helly_audit(system)
    print(json.dumps({
        "all_subsystems_feasible": ok,
        "full_system_feasible": fm_feasible(system).feasible,
    }, indent=2))
    return 0


def _cmd_moment(args) -> int:
    body = _load_body(args.input)
    w = tuple(parse_rational(c) for c in args.w.split(","))
    value = directional_moment(body, w, center=not args.no_center)
    print(json.dumps({
        "w": [format_rational(c) for c in w],
        "centered": not args.no_center,
        "moment": format_rational(value),
    }, indent=2))
    return 0


def _load_specs(path, base_seed: int) -> list[GenSpec]:
    data = load_json(path)
    raw = data["specs"] if isinstance(data, dict) else data
    specs = []
    for i, row in enumerate(raw):
        seed = row.get("seed")
        if seed is None:
            seed = base_seed * 1_000_003 + i
        specs.append(GenSpec(
            kind=row["kind"],
            dim=int(row["dim"]),
            vertex_count=row.get("vertex_count"),
            seed=int(seed),
            denominator_bound=int(
                row.get("denominator_bound",
                        row.get("coordinate_denominator_bound", 1))),
        ))
    return specs


def _cmd_sweep(args) -> int:
    specs = _load_specs(args.spec, args.seed)
    summary = sweep(specs, args.out, jobs=args.jobs, floats=args.floats)
    for line in summary.observations:
        print(line)
    print(f"bodies={summary.bodies} rows={summary.rows} "
          f"errors={summary.errors} observations={len(summary.observations)} "
          f"violations={summary.violations}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="godbersen",
        description="Exact rational checks of mixed-volume inequalities on polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a polytope and write it as JSON")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--vertices", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--denominator-bound", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="Godbersen report for one polytope file")
    p.add_argument("--input", required=True)
    p.add_argument("--j", type=int, default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("ak", help="anchor point of one polytope file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_ak)

    p = sub.add_parser("helly", help="subset audit of a halfspace-system file")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_helly)

    p = sub.add_parser("moment", help="directional section moment of one body")
    p.add_argument("--input", required=True)
    p.add_argument("--w", required=True, help="direction, e.g. \"1,0,2/3\"")
    p.add_argument("--no-center", action="store_true",
                   help="skip the centroid centering (raw moment)")
    p.set_defaults(func=_cmd_moment)

    p = sub.add_parser("sweep", help="run all checks over a spec file")
    p.add_argument("--spec", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0,
                   help="base seed for spec rows that do not fix one")
    p.add_argument("--floats", action="store_true",
                   help="append decimal-approximation columns")
    p.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as err:
        print(f"THEOREM VIOLATION: {err}", file=sys.stderr)
        return 2
    except (GodbersenError, ValueError, OSError, KeyError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
