"""Nonnegative piecewise-linear concave functions on [0,1] and the integral
inequality driving the inclusion proof, plus the Brunn-Minkowski and
slice-root-concavity checks.

The central fact: for any integer m >= 2 and concave f : [0,1] -> [0, inf),

    integral_0^1 (r - 1/(m+1)) f^{m-1}(r) dr >= 0,

with equality exactly when f(1) = 0 and f is linear.  On each knot interval f
is linear, so the integrand is a degree-m polynomial and the integral is
computed in closed form over Q; every exact assertion here is root-free.
n-th roots appear only inside the tolerance-based floating checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InvalidM, LemmaViolation, NotConcave
from .geometry import Polytope, minkowski_sum, volume
from .polynomials import definite_integral, mul, power
from .rationals import Rat, as_rat, as_vector
from .sections import section_profile

CONCAVITY_TOL = 1e-9


@dataclass(frozen=True)
class PLConcave:
    """Piecewise-linear concave f >= 0 on [0,1]; knots include 0 and 1."""

    knots: tuple[Rat, ...]
    values: tuple[Rat, ...]

    def __post_init__(self):
        k, v = self.knots, self.values
        if len(k) != len(v) or len(k) < 2:
            raise NotConcave("knots and values must match and cover [0,1]")
        if k[0] != 0 or k[-1] != 1:
            raise NotConcave("domain must be exactly [0,1]")
        if any(b <= a for a, b in zip(k, k[1:])):
            raise NotConcave("knots must be strictly increasing")
        if any(x < 0 for x in v):
            raise NotConcave("values must be nonnegative")
        slopes = self.slopes()
        if any(s2 > s1 for s1, s2 in zip(slopes, slopes[1:])):
            raise NotConcave("slopes must be nonincreasing")

    def slopes(self) -> tuple[Rat, ...]:
        return tuple((v2 - v1) / (k2 - k1)
                     for (k1, v1), (k2, v2)
                     in zip(zip(self.knots, self.values),
                            zip(self.knots[1:], self.values[1:])))

    def value(self, r) -> Rat:
        x = as_rat(r)
        if not 0 <= x <= 1:
            raise ValueError("argument outside [0,1]")
        for (k1, v1), (k2, v2) in zip(zip(self.knots, self.values),
                                      zip(self.knots[1:], self.values[1:])):
            if x <= k2:
                return v1 + (v2 - v1) * (x - k1) / (k2 - k1)
        return self.values[-1]

    def is_linear(self) -> bool:
        """Single slope across all of [0,1]."""
        slopes = self.slopes()
        return all(s == slopes[0] for s in slopes)

    def scaled(self, c) -> "PLConcave":
        cc = as_rat(c)
        if cc < 0:
            raise NotConcave("scaling must be nonnegative")
        return PLConcave(self.knots, tuple(cc * v for v in self.values))


@dataclass(frozen=True)
class IntegralCheckResult:
    value: Rat
    nonneg: bool
    equality: bool
    equality_characterized: bool


@dataclass(frozen=True)
class BrunnMinkowskiResult:
    lhs: float
    rhs: float
    ok: bool


def godbersen_integral(f: PLConcave, m: int) -> Rat:
    """Exact value of integral_0^1 (r - 1/(m+1)) f^{m-1}(r) dr for m >= 2."""
    if m < 2:
        raise InvalidM(f"exponent must be an integer >= 2, got {m}")
    shift = [-Fraction(1, m + 1), Fraction(1)]
    total = Fraction(0)
    for (k1, v1), (k2, v2) in zip(zip(f.knots, f.values),
                                  zip(f.knots[1:], f.values[1:])):
        slope = (v2 - v1) / (k2 - k1)
        line = [v1 - slope * k1, slope]
        total += definite_integral(mul(shift, power(line, m - 1)), k1, k2)
    return total


def godbersen_integral_check(f: PLConcave, m: int) -> IntegralCheckResult:
    """Value, nonnegativity and the exact equality characterization.

    Equality must coincide with (f(1) = 0 and f linear); either a negative
    value or a mismatch of the characterization indicates a bug and raises.
    The zero function is linear with f(1) = 0 and counts as characterized.
    """
    value = godbersen_integral(f, m)
    if value < 0:
        raise LemmaViolation(f"integral {value} < 0 for a concave input")
    equality = value == 0
    characterized = f.values[-1] == 0 and f.is_linear()
    if equality != characterized:
        raise LemmaViolation(
            f"equality={equality} but characterization={characterized}")
    return IntegralCheckResult(value, True, equality, characterized)


def random_concave(rng: random.Random, max_extra_knots: int = 6,
                   denominator_bound: int = 8) -> PLConcave:
    """Seeded random nonnegative concave PL function on [0,1].

    Recipe: sample up to ``max_extra_knots`` interior rational knots, sample
    one rational slope per interval, sort the slopes in decreasing order,
    integrate to values, then shift so the minimum value is exactly 0.
    """
    while True:
        extra = rng.randint(0, max_extra_knots)
        interior = {Fraction(rng.randint(1, denominator_bound * 4),
                             denominator_bound * 4 + 1)
                    for _ in range(extra)}
        knots = sorted({Fraction(0), Fraction(1)} | interior)
        if len(knots) >= 2:
            break
    slopes = sorted(
        (Fraction(rng.randint(-24, 24), rng.randint(1, denominator_bound))
         for _ in range(len(knots) - 1)),
        reverse=True,
    )
    values = [Fraction(0)]
    for (k1, k2), s in zip(zip(knots, knots[1:]), slopes):
        values.append(values[-1] + s * (k2 - k1))
    low = min(values)
    return PLConcave(tuple(knots), tuple(v - low for v in values))


def slice_root_concavity(K: Polytope, w, samples: int = 33) -> bool:
    """Concavity of the (n-1)-st root of the section profile along w.

    For n = 2 the profile itself must be concave and the slopes of its linear
    pieces are compared exactly.  For n >= 3 the root is evaluated in floating
    point on an equispaced grid and midpoint concavity is required within a
    relative tolerance of 1e-9.
    """
    if samples < 3:
        raise ValueError("need at least 3 sample points")
    prof = section_profile(K, as_vector(w))
    n = K.dim
    if n == 2:
        slopes = []
        for piece in prof.pieces:
            p = list(piece)
            if len(p) > 2:
                return False
            slopes.append(p[1] if len(p) == 2 else Fraction(0))
        return all(s2 <= s1 for s1, s2 in zip(slopes, slopes[1:]))
    lo, hi = prof.support_interval()
    span = hi - lo
    root = Fraction(1, n - 1)
    vals = []
    for i in range(samples):
        t = lo + span * Fraction(i, samples - 1)
        s = prof.value(t)
        vals.append(float(s) ** float(root) if s > 0 else 0.0)
    scale = max(vals) if max(vals) > 0 else 1.0
    tol = CONCAVITY_TOL * scale
    return all(vals[i] >= (vals[i - 1] + vals[i + 1]) / 2 - tol
               for i in range(1, samples - 1))


def bm_check(K: Polytope, L: Polytope) -> BrunnMinkowskiResult:
    """Vol(K+L)^(1/n) >= Vol(K)^(1/n) + Vol(L)^(1/n), floating roots of exact
    volumes, relative tolerance 1e-9; equality holds exactly for homothets."""
    if K.dim != L.dim:
        raise DimensionMismatch("bodies live in different dimensions")
    n = K.dim
    lhs = float(volume(minkowski_sum(K, L))) ** (1.0 / n)
    rhs = float(volume(K)) ** (1.0 / n) + float(volume(L)) ** (1.0 / n)
    return BrunnMinkowskiResult(lhs, rhs, lhs >= rhs - 1e-9 * rhs)


def bridge_inequality(K: Polytope, w) -> Rat:
    """The profile-form inequality behind the inclusion proof.

    For the centered body, substituting the normalized section root
    f(r) = s(lo + r * width)^(1/(n-1)) turns the moment identity into
    integral_0^1 (r - 1/(n+1)) f^{n-1}(r) dr >= 0, and f^{n-1} is the exact
    piecewise-polynomial profile, so the value is computed root-free.  Returns
    the exact integral (nonnegative for centered bodies).
    """
    from .inclusion import center_at_centroid

    k0 = center_at_centroid(K)
    prof = section_profile(k0, as_vector(w))
    lo, hi = prof.support_interval()
    wid = hi - lo
    n = K.dim
    total = Fraction(0)
    shift = [-Fraction(1, n + 1), Fraction(1)]
    for i, piece in enumerate(prof.pieces):
        a, b = prof.breakpoints[i], prof.breakpoints[i + 1]
        # substitute t = lo + r*wid; dr = dt/wid, r = (t-lo)/wid
        r_of_t = [Fraction(-lo, wid), Fraction(1, wid)]
        integrand = mul([shift[0] + shift[1] * r_of_t[0], shift[1] * r_of_t[1]],
                        list(piece))
        total += definite_integral(integrand, a, b) / wid
    return total
