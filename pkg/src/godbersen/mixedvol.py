"""Mixed volumes of polytope pairs and the Godbersen inequality report.

Two independent routes are kept deliberately separate: the first mixed volume
comes from the facet formula

    V(K[1], T[n-1]) = (1/n) * sum over facets F of T of h_K(w_F) * mu_F,

while the full coefficient profile comes from exact volumes of K + t L at
t = 1..n+1 and an exact Vandermonde solve.  The profile's second coefficient
must reproduce the facet formula exactly; that cross-check runs on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DimensionMismatch, TheoremViolation
from .geometry import Polytope, minkowski_sum, reflect, support, volume
from .linalg import solve_linear
from .rationals import Rat, as_vector, dot


@dataclass(frozen=True)
class MixedVolumeProfile:
    """Coefficients m_j = V(K[n-j], L[j]) for j = 0..n, so
    Vol(K + tL) = sum_j C(n,j) m_j t^j."""

    n: int
    coeffs: tuple[Rat, ...]

    def mixed(self, j: int) -> Rat:
        """V(K[n-j], L[j])."""
        return self.coeffs[j]

    def reversed(self) -> "MixedVolumeProfile":
        return MixedVolumeProfile(self.n, tuple(reversed(self.coeffs)))


@dataclass(frozen=True)
class GodbersenEntry:
    """One j-row of the report; ``mixed`` is V(K[j], -K[n-j])."""

    j: int
    mixed: Rat
    binom: int
    ratio: Rat
    bound_nmin: Rat
    nmin_ok: bool
    artstein_ok: bool


@dataclass(frozen=True)
class GodbersenReport:
    n: int
    volume: Rat
    entries: tuple[GodbersenEntry, ...]
    is_simplex: bool

    def entry(self, j: int) -> GodbersenEntry:
        for e in self.entries:
            if e.j == j:
                return e
        raise KeyError(j)


def _support_any(body, w) -> Rat:
    if isinstance(body, Polytope):
        return support(body, w)
    return dot(as_vector(w), body)


def mv_first(K, T: Polytope) -> Rat:
    """V(K[1], T[n-1]) by the facet formula; K may be a polytope or a point."""
    if isinstance(K, Polytope) and K.dim != T.dim:
        raise DimensionMismatch("mixed volume needs equal dimensions")
    if not isinstance(K, Polytope) and len(K) != T.dim:
        raise DimensionMismatch("point length does not match the body")
    acc = Fraction(0)
    for f in T.facets:
        acc += _support_any(K, f.normal) * f.measure
    return acc / T.dim


def _scale_second(L, t: int):
    if isinstance(L, Polytope):
        from .geometry import scale

        return scale(L, t)
    return tuple(Fraction(c) * t for c in L)


def mv_profile(K: Polytope, L) -> MixedVolumeProfile:
    """All coefficients V(K[n-j], L[j]) by interpolation of Vol(K + tL).

    Volumes are evaluated exactly at t = 1..n+1 (every summand there is
    full-dimensional even for a degenerate L) and the Vandermonde system is
    solved exactly.  L may be a polytope or a single point.
    """
    n = K.dim
    if isinstance(L, Polytope) and L.dim != n:
        raise DimensionMismatch("mixed volume needs equal dimensions")
    if not isinstance(L, Polytope):
        L = as_vector(L, n)
    nodes = list(range(1, n + 2))
    vols = [volume(minkowski_sum(K, _scale_second(L, t))) for t in nodes]
    vmat = tuple(tuple(Fraction(t ** j) for j in range(n + 1)) for t in nodes)
    c = solve_linear(vmat, vols)
    coeffs = tuple(c[j] / comb(n, j) for j in range(n + 1))
    for j, m in enumerate(coeffs):
        if m < 0:
            raise TheoremViolation(f"negative mixed volume m_{j} = {m}")
    if coeffs[0] != K.volume:
        raise TheoremViolation("profile endpoint m_0 disagrees with Vol(K)")
    if isinstance(L, Polytope) and coeffs[n] != L.volume:
        raise TheoremViolation("profile endpoint m_n disagrees with Vol(L)")
    first = mv_first(L, K)
    if coeffs[1] != first:
        raise TheoremViolation(
            f"profile coefficient m_1 = {coeffs[1]} disagrees with the facet "
            f"formula value {first}")
    return MixedVolumeProfile(n, coeffs)


_LAMBDA_GRID = tuple(Fraction(i, 10) for i in range(1, 10))


def godbersen_report(K: Polytope) -> GodbersenReport:
    """Per-j Godbersen data for the pair (K, -K).

    ratio = V(K[j], -K[n-j]) / (C(n,j) Vol K).  For j = 1 and j = n-1 the
    ratio must not exceed 1 (proven); a violation raises.  Middle j are
    reported but never asserted (open conjecture).  Each row also checks the
    n^min(j, n-j) bound and the lambda-grid bound
    lambda^j (1-lambda)^(n-j) mixed <= Vol K at lambda in {1/10..9/10, j/n};
    the grid can falsify but never certify the continuous statement.
    """
    n = K.dim
    vol = K.volume
    profile = mv_profile(K, reflect(K))
    entries = []
    for j in range(1, n):
        mixed = profile.coeffs[n - j]
        binom = comb(n, j)
        if mixed <= 0:
            raise TheoremViolation(
                f"mixed volume at j={j} is {mixed}; must be positive for "
                f"full-dimensional bodies")
        ratio = mixed / (binom * vol)
        if j in (1, n - 1) and ratio > 1:
            raise TheoremViolation(
                f"ratio {ratio} > 1 at j={j}; the proven case failed")
        bound = Fraction(n ** min(j, n - j))
        nmin_ok = mixed <= bound * vol
        lambdas = _LAMBDA_GRID + (Fraction(j, n),)
        artstein_ok = all(
            lam ** j * (1 - lam) ** (n - j) * mixed <= vol for lam in lambdas)
        entries.append(GodbersenEntry(j, mixed, binom, ratio, bound, nmin_ok,
                                      artstein_ok))
    return GodbersenReport(n, vol, tuple(entries), len(K.vertices) == n + 1)
