"""Corpus sweeps: run every check over generated bodies and emit a CSV.

One row per (body, j).  Proven statements are asserted and abort the sweep via
TheoremViolation; ratios for middle j (the open cases) are reported, and an
exceedance there is recorded as an observation without failing the run.
Output is fully deterministic: identical specs produce byte-identical CSV,
whatever the worker count, because rows are sorted before writing.
"""

from __future__ import annotations

import csv
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .errors import GodbersenError, TheoremViolation
from .generators import GenSpec, generate
from .halfspaces import ak_feasibility
from .inclusion import directional_moment, inclusion_in_nK, tightness_profile
from .concave import slice_root_concavity
from .mixedvol import godbersen_report
from .rationals import Rat, format_rational

CSV_VERSION = "godbersen-sweep-v1"
COLUMNS = ("body_id", "n", "vertex_count", "j", "ratio", "tight_count",
           "ak_unique", "moment_zero", "inclusion_ok", "error")
ROOT_CONCAVITY_DIRECTIONS = 5


@dataclass(frozen=True)
class SweepRow:
    body_id: str
    n: int
    vertex_count: int
    j: int
    ratio: Rat | None
    tight_count: int
    ak_unique: bool
    moment_zero: bool
    inclusion_ok: bool
    error: str = ""


@dataclass(frozen=True)
class SweepSummary:
    bodies: int
    rows: int
    errors: int
    observations: tuple[str, ...]
    violations: int = 0


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _random_direction(rng: random.Random, dim: int) -> tuple[int, ...]:
    while True:
        v = tuple(rng.randint(-5, 5) for _ in range(dim))
        if any(c != 0 for c in v):
            return v


def check_body(body_id: str, spec: GenSpec) -> tuple[list[SweepRow], list[str]]:
    """All per-body checks; returns (rows, observations).

    Recoverable generation failures become a single error row; violated
    theorems propagate and abort the sweep.
    """
    try:
        body = generate(spec)
    except GodbersenError as err:
        row = SweepRow(body_id, spec.dim, 0, 0, None, 0, False, False, False,
                       f"{type(err).__name__}: {err}")
        return [row], []

    observations: list[str] = []
    report = godbersen_report(body)
    feas = ak_feasibility(body)
    inclusion_ok = inclusion_in_nK(body)
    tight = tightness_profile(body)
    moment_zero = all(
        directional_moment(body, f.normal) == 0 for f in body.facets)

    rng = random.Random(spec.seed ^ 0x5EED5EED)
    for _ in range(ROOT_CONCAVITY_DIRECTIONS):
        direction = _random_direction(rng, body.dim)
        if not slice_root_concavity(body, direction):
            observations.append(
                f"OBSERVATION {body_id}: root concavity tolerance check "
                f"failed along {direction}")

    for entry in report.entries:
        if entry.ratio > 1 and entry.j not in (1, report.n - 1):
            observations.append(
                f"OBSERVATION {body_id}: ratio {entry.ratio} > 1 at middle "
                f"j={entry.j} (open case, not asserted)")

    rows = [
        SweepRow(body_id, body.dim, len(body.vertices), e.j, e.ratio,
                 tight.tight_count, feas.unique, moment_zero, inclusion_ok)
        for e in report.entries
    ]
    return rows, observations


def _worker(item: tuple[str, GenSpec]):
    return check_body(*item)


def sweep(specs: list[GenSpec], out, jobs: int = 1,
          floats: bool = False) -> SweepSummary:
    """Run the full check battery over ``specs`` and write the CSV to ``out``.

    Bodies are processed independently (optionally in parallel); rows are
    sorted by (body_id, j) before writing so output never depends on worker
    scheduling.
    """
    items = [(f"{i:04d}-{s.kind}-n{s.dim}", s) for i, s in enumerate(specs)]
    results = []
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_worker, items))
    else:
        results = [check_body(bid, s) for bid, s in items]

    rows: list[SweepRow] = []
    observations: list[str] = []
    for body_rows, body_obs in results:
        rows.extend(body_rows)
        observations.extend(body_obs)
    rows.sort(key=lambda r: (r.body_id, r.j))

    columns = list(COLUMNS) + (["ratio_float"] if floats else [])
    path = Path(out)
    with path.open("w", newline="") as fh:
        fh.write(f"# {CSV_VERSION} columns={','.join(columns)}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            record = [
                r.body_id, r.n, r.vertex_count, r.j,
                format_rational(r.ratio) if r.ratio is not None else "",
                r.tight_count, _bool(r.ak_unique), _bool(r.moment_zero),
                _bool(r.inclusion_ok), r.error,
            ]
            if floats:
                record.append(
                    f"{float(r.ratio):.17g}" if r.ratio is not None else "")
            writer.writerow(record)

    errors = sum(1 for r in rows if r.error)
    return SweepSummary(len(items), len(rows), errors, tuple(observations))
