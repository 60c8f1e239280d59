"""Exact one-dimensional section profiles of polytopes.

For a body K and a nonzero direction w, the profile s(t) is the derivative of
the cumulative volume function V(t) = Vol(K intersect {x . w <= t}), stored in
the scaled coordinate t = x . w.  Between consecutive vertex levels V is a
polynomial of degree <= n, so s is piecewise polynomial of degree <= n-1 and
integrates exactly to Vol(K).

V(t) is evaluated through the precomputed simplicial decomposition: the
fraction of a simplex below a hyperplane that misses its vertices has an exact
rational recursion in the signed vertex heights (the classic cut-volume
recursion, checked by the 1- and 2-dimensional closed forms).  Each piece is
then recovered by exact Lagrange interpolation on interior rational nodes.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .errors import DimensionMismatch, ZeroDirection
from .geometry import Polytope, _simplex_int_volume
from .polynomials import (
    Poly,
    definite_integral,
    derivative,
    evaluate,
    interpolate,
    mul,
)
from .rationals import Rat, Vector, as_vector, dot, is_zero_vector


@dataclass(frozen=True)
class SectionProfile:
    """Piecewise polynomial slice-measure profile along a fixed direction."""

    direction: Vector
    breakpoints: tuple[Rat, ...]
    pieces: tuple[tuple[Fraction, ...], ...]

    def value(self, t) -> Fraction:
        """s(t); zero outside the support, exact everywhere."""
        x = Fraction(t)
        bp = self.breakpoints
        if x < bp[0] or x > bp[-1]:
            return Fraction(0)
        i = bisect.bisect_right(bp, x) - 1
        i = min(i, len(self.pieces) - 1)
        return evaluate(list(self.pieces[i]), x)

    def integral(self) -> Fraction:
        """Integral of s over its support; equals the body volume."""
        return sum(
            (definite_integral(list(p), self.breakpoints[i], self.breakpoints[i + 1])
             for i, p in enumerate(self.pieces)),
            Fraction(0),
        )

    def moment(self) -> Fraction:
        """Integral of t * s(t) over the support."""
        ramp: Poly = [Fraction(0), Fraction(1)]
        return sum(
            (definite_integral(mul(ramp, list(p)),
                               self.breakpoints[i], self.breakpoints[i + 1])
             for i, p in enumerate(self.pieces)),
            Fraction(0),
        )

    def support_interval(self) -> tuple[Rat, Rat]:
        return self.breakpoints[0], self.breakpoints[-1]


def _cut_fraction(heights: list[Fraction]) -> Fraction:
    """Volume fraction of a simplex on the <=0 side of a linear functional.

    ``heights`` are the functional's (nonzero) values at the vertices.  The
    recursion F[i][j] over i processed negatives and j processed positives,
    F[i][0] = 1 and F[0][j] = 0, with
    F[i][j] = (g_j F[i-1][j] + h_i F[i][j-1]) / (g_j + h_i),
    yields the fraction at F[p][q].
    """
    neg = [-v for v in heights if v < 0]
    pos = [v for v in heights if v > 0]
    if not neg:
        return Fraction(0)
    if not pos:
        return Fraction(1)
    row = [Fraction(1)] + [Fraction(0)] * len(pos)
    for h in neg:
        new = [Fraction(1)] * (len(pos) + 1)
        for j, g in enumerate(pos, start=1):
            new[j] = (g * row[j] + h * new[j - 1]) / (g + h)
        row = new
    return row[-1]


def section_profile(K: Polytope, w) -> SectionProfile:
    """Exact profile of K along w, in the t = x . w coordinate.

    Breakpoints are the distinct vertex levels; on each open interval the
    piece is the exact derivative of the cumulative volume polynomial.
    """
    v = as_vector(w)
    if len(v) != K.dim:
        raise DimensionMismatch("direction length does not match the body")
    if is_zero_vector(v):
        raise ZeroDirection("section direction must be nonzero")
    n = K.dim
    levels = [dot(v, p) for p in K.vertices]
    breakpoints = sorted(set(levels))

    nfact = factorial(n)
    spow = K._int_scale ** n
    simplex_data = []
    for s in K._simplices:
        vol = Fraction(_simplex_int_volume(K._int_vertices, s, n), nfact * spow)
        if vol != 0:
            simplex_data.append((vol, [levels[i] for i in s]))

    def cumulative(t: Fraction) -> Fraction:
        acc = Fraction(0)
        for vol, hs in simplex_data:
            acc += vol * _cut_fraction([h - t for h in hs])
        return acc

    pieces = []
    for lo, hi in zip(breakpoints, breakpoints[1:]):
        span = hi - lo
        nodes = [lo + span * Fraction(j, n + 2) for j in range(1, n + 2)]
        values = [cumulative(t) for t in nodes]
        pieces.append(tuple(derivative(interpolate(nodes, values))))
    return SectionProfile(v, tuple(breakpoints), tuple(pieces))
