"""JSON wire formats for polytopes, halfspace systems, concave functions and
reports.

Rationals travel as decimal-free strings "p/q" or "k"; writers emit lowest
terms, readers accept any equivalent fraction.  A polytope file stores only
the vertex list; reading re-derives the facet structure, so redundant points
in a hand-written file are tolerated and dropped.
"""

from __future__ import annotations

import json
from pathlib import Path

from .concave import PLConcave
from .geometry import Polytope, build_hull
from .halfspaces import System, make_system
from .inclusion import TightnessProfile
from .mixedvol import GodbersenReport
from .rationals import format_rational, parse_rational


def polytope_to_dict(K: Polytope) -> dict:
    return {
        "dim": K.dim,
        "vertices": [[format_rational(c) for c in p] for p in K.vertices],
    }


def polytope_from_dict(data: dict) -> Polytope:
    dim = int(data["dim"])
    vertices = [tuple(parse_rational(c) for c in p) for p in data["vertices"]]
    if any(len(p) != dim for p in vertices):
        raise ValueError("vertex length disagrees with the declared dimension")
    return build_hull(vertices)


def system_to_dict(s: System) -> dict:
    return {
        "dim": s.dim,
        "rows": [
            {"w": [format_rational(c) for c in h.normal],
             "beta": format_rational(h.rhs)}
            for h in s.halfspaces
        ],
    }


def system_from_dict(data: dict) -> System:
    dim = int(data["dim"])
    rows = [(tuple(parse_rational(c) for c in r["w"]), parse_rational(r["beta"]))
            for r in data["rows"]]
    return make_system(dim, rows)


def plconcave_to_dict(f: PLConcave) -> dict:
    return {
        "knots": [format_rational(k) for k in f.knots],
        "values": [format_rational(v) for v in f.values],
    }


def plconcave_from_dict(data: dict) -> PLConcave:
    return PLConcave(
        tuple(parse_rational(k) for k in data["knots"]),
        tuple(parse_rational(v) for v in data["values"]),
    )


def report_to_dict(report: GodbersenReport) -> dict:
    return {
        "n": report.n,
        "volume": format_rational(report.volume),
        "entries": [
            {
                "j": e.j,
                "mixed": format_rational(e.mixed),
                "ratio": format_rational(e.ratio),
                "nmin_ok": e.nmin_ok,
                "artstein_ok": e.artstein_ok,
            }
            for e in report.entries
        ],
        "is_simplex": report.is_simplex,
    }


def tightness_to_rows(profile: TightnessProfile) -> list[dict]:
    return [
        {
            "w": [format_rational(c) for c in e.normal],
            "lhs": format_rational(e.lhs),
            "rhs": format_rational(e.rhs),
            "tight": e.tight,
        }
        for e in profile.entries
    ]


def load_json(path) -> dict:
    return json.loads(Path(path).read_text())


def save_json(path, data: dict) -> None:
    Path(path).write_text(json.dumps(data, indent=2) + "\n")
