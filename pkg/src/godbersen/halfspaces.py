"""Halfspace systems, exact Fourier-Motzkin feasibility, and the anchor-point
construction.

For a polytope K with facet normals u, the anchor system collects the
halfspaces  a . u <= n/(n+1) h_K(u) - 1/(n+1) h_K(-u).  Any point of the
(always nonempty) intersection certifies the support inequality
h_{-K+a}(u) <= n h_{K-a}(u) at every facet normal, which is the exact input
the first-mixed-volume bound needs.  Feasibility is decided by Fourier-Motzkin
elimination, which stays in Q, needs no pivoting rules, and reads off
uniqueness for free.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd, lcm

from .errors import (
    CombinatorialBlowup,
    DimensionMismatch,
    SingularMatrix,
    TheoremViolation,
    ZeroDirection,
)
from .geometry import Polytope, support, transform
from .linalg import det
from .rationals import Point, Rat, Vector, as_rat, as_vector, dot, is_zero_vector

SUBSET_CAP_ENV = "GODBERSEN_SUBSET_CAP"
DEFAULT_SUBSET_CAP = 200_000


@dataclass(frozen=True)
class HalfSpace:
    """Closed halfspace {a : a . normal <= rhs}; the normal is unnormalized."""

    normal: Vector
    rhs: Rat

    def __post_init__(self):
        if is_zero_vector(self.normal):
            raise ZeroDirection("halfspace normal must be nonzero")

    def contains(self, point) -> bool:
        return dot(self.normal, point) <= self.rhs


@dataclass(frozen=True)
class System:
    """Finite conjunction of halfspaces in a fixed ambient dimension."""

    dim: int
    halfspaces: tuple[HalfSpace, ...]

    def __post_init__(self):
        if not self.halfspaces:
            raise ValueError("a system needs at least one halfspace")
        for h in self.halfspaces:
            if len(h.normal) != self.dim:
                raise DimensionMismatch("halfspace normal of wrong length")

    def contains(self, point) -> bool:
        return all(h.contains(point) for h in self.halfspaces)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Point | None
    unique: bool


def make_system(dim: int, rows) -> System:
    """Rows are (normal, rhs) pairs with rational entries."""
    return System(dim, tuple(HalfSpace(as_vector(w, dim), as_rat(b)) for w, b in rows))


_Row = tuple[tuple[Fraction, ...], Fraction]


def _canonical_rows(rows) -> tuple[list[_Row], bool]:
    """Scale rows to coprime-integer coefficients, drop duplicates and rows
    dominated by an identical-coefficient row with smaller rhs.  Constant rows
    are consumed here; a violated one makes the system infeasible."""
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for coeffs, rhs in rows:
        if all(c == 0 for c in coeffs):
            if rhs < 0:
                return [], False
            continue
        mult = 1
        for c in coeffs:
            mult = lcm(mult, c.denominator)
        ints = [int(c * mult) for c in coeffs]
        g = 0
        for c in ints:
            g = gcd(g, abs(c))
        key = tuple(Fraction(c, g) for c in ints)
        scaled = rhs * mult / g
        if key not in best or scaled < best[key]:
            best[key] = scaled
    return [(k, v) for k, v in best.items()], True


def _eliminate(rows: list[_Row], k: int) -> tuple[list[_Row], bool]:
    """Project out variable index k; returns (rows, still-consistent)."""
    zero, pos, neg = [], [], []
    for coeffs, rhs in rows:
        c = coeffs[k]
        if c == 0:
            zero.append((coeffs, rhs))
        elif c > 0:
            pos.append((coeffs, rhs))
        else:
            neg.append((coeffs, rhs))
    combined = list(zero)
    for pc, pr in pos:
        for nc, nr in neg:
            a, b = -nc[k], pc[k]
            coeffs = tuple(a * x + b * y for x, y in zip(pc, nc))
            combined.append((coeffs, a * pr + b * nr))
    return _canonical_rows(combined)


def fm_feasible(system: System) -> FeasibilityResult:
    """Exact Fourier-Motzkin feasibility with a deterministic witness.

    Variables are eliminated from the last to the first; on back-substitution
    each remaining interval contributes the midpoint (0 if unconstrained, the
    finite endpoint moved inward by 1 if bounded on one side only).  The
    feasible region is a single point exactly when every interval collapses.
    """
    n = system.dim
    base = [(tuple(Fraction(c) for c in h.normal), Fraction(h.rhs))
            for h in system.halfspaces]
    stage, ok = _canonical_rows(base)
    stages: list[list[_Row]] = [stage]
    for k in range(n - 1, 0, -1):
        if not ok:
            break
        stage, ok = _eliminate(stage, k)
        stages.append(stage)
    if not ok:
        return FeasibilityResult(False, None, False)

    witness: list[Fraction] = []
    unique = True
    for k in range(n):
        rows = stages[n - 1 - k]
        lo: Fraction | None = None
        hi: Fraction | None = None
        for coeffs, rhs in rows:
            c = coeffs[k]
            if c == 0:
                continue
            resid = rhs - sum(coeffs[j] * witness[j] for j in range(k))
            bound = resid / c
            if c > 0:
                hi = bound if hi is None else min(hi, bound)
            else:
                lo = bound if lo is None else max(lo, bound)
        if lo is not None and hi is not None:
            if lo > hi:
                return FeasibilityResult(False, None, False)
            witness.append((lo + hi) / 2)
            unique = unique and lo == hi
        elif lo is not None:
            witness.append(lo + 1)
            unique = False
        elif hi is not None:
            witness.append(hi - 1)
            unique = False
        else:
            witness.append(Fraction(0))
            unique = False
    return FeasibilityResult(True, tuple(witness), unique)


def ak_system(K: Polytope) -> System:
    """One halfspace per facet normal u of K:
    a . u <= n/(n+1) h_K(u) - 1/(n+1) h_K(-u)."""
    n = K.dim
    rows = []
    for f in K.facets:
        h_plus = f.offset
        h_minus = support(K, tuple(-c for c in f.normal))
        rhs = Fraction(n, n + 1) * h_plus - Fraction(1, n + 1) * h_minus
        rows.append((tuple(Fraction(c) for c in f.normal), rhs))
    return make_system(n, rows)


def ak_feasibility(K: Polytope) -> FeasibilityResult:
    """Solve the anchor system and validate the witness exactly.

    Infeasibility or a witness failing the support inequality
    h_{-K}(u) + (n+1) a . u <= n h_K(u) at any facet normal indicates a bug,
    never a property of the input body.
    """
    res = fm_feasible(ak_system(K))
    if not res.feasible:
        raise TheoremViolation("anchor system infeasible; this must never happen")
    a = res.witness
    n = K.dim
    for f in K.facets:
        lhs = support(K, tuple(-c for c in f.normal)) + (n + 1) * dot(f.normal, a)
        if lhs > n * f.offset:
            raise TheoremViolation("anchor witness fails the support inequality")
    return res


def ak_point(K: Polytope) -> Point:
    """A point of the anchor region, validated against every facet normal."""
    return ak_feasibility(K).witness


def helly_audit(system: System, cap: int | None = None) -> bool:
    """Check every (dim+1)-subset of halfspaces for feasibility.

    Vacuously true when there are fewer than dim+1 halfspaces.  Otherwise the
    outcome must agree with full-system feasibility (Helly's theorem for a
    finite family of convex sets), so any disagreement raises.
    """
    n = system.dim
    rows = system.halfspaces
    if len(rows) < n + 1:
        return True
    if cap is None:
        cap = int(os.environ.get(SUBSET_CAP_ENV, DEFAULT_SUBSET_CAP))
    total = comb(len(rows), n + 1)
    if total > cap:
        raise CombinatorialBlowup(
            f"{total} subsets exceed the cap of {cap}; raise {SUBSET_CAP_ENV}")
    all_ok = True
    for subset in combinations(rows, n + 1):
        if not fm_feasible(System(n, subset)).feasible:
            all_ok = False
            break
    full = fm_feasible(system).feasible
    if all_ok != full:
        raise TheoremViolation("subset audit disagrees with full feasibility")
    return all_ok


def gl_invariance_check(K: Polytope, mat) -> bool:
    """Feasibility of the anchor system is invariant under invertible maps.

    Checks that K and its image share feasibility status and that the mapped
    witness A a satisfies the image's anchor system (the image's facet normals
    are the inverse-transpose images of K's, up to positive scale, so the two
    systems correspond row by row).
    """
    a = tuple(tuple(as_rat(c) for c in row) for row in mat)
    if det(a) == 0:
        raise SingularMatrix("invariance check needs an invertible matrix")
    image = transform(K, a)
    res_k = fm_feasible(ak_system(K))
    res_img = fm_feasible(ak_system(image))
    ok = res_k.feasible == res_img.feasible
    if ok and res_k.feasible:
        mapped = tuple(sum(a[r][c] * res_k.witness[c] for c in range(K.dim))
                       for r in range(K.dim))
        ok = ak_system(image).contains(mapped)
    return ok
