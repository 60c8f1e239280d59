"""Centroid-centered inclusion -K in nK, tightness per facet normal, and the
directional moment identity.

With the centroid at the origin the reflected body sits inside the n-fold
dilate; per facet normal u the comparison h_{-K}(u) <= n h_K(u) is evaluated
at the unnormalized integer normals (both sides are 1-homogeneous, so the
scaling drops out) and "tight" means exact rational equality.  The moment of
the section profile of the centered body vanishes exactly in every direction;
it is computed by exact piecewise-polynomial integration, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import TheoremViolation
from .geometry import Polytope, includes, reflect, scale, support, translate
from .rationals import Rat, as_vector
from .sections import section_profile


@dataclass(frozen=True)
class TightnessEntry:
    normal: tuple[int, ...]
    lhs: Rat
    rhs: Rat
    tight: bool


@dataclass(frozen=True)
class TightnessProfile:
    """Per-facet comparison h_{-K0}(u) vs n * h_{K0}(u) for the centered body."""

    entries: tuple[TightnessEntry, ...]

    @property
    def tight_count(self) -> int:
        return sum(1 for e in self.entries if e.tight)

    @property
    def all_tight(self) -> bool:
        return all(e.tight for e in self.entries)


def center_at_centroid(K: Polytope) -> Polytope:
    """Translate of K with centroid exactly at the origin."""
    return translate(K, tuple(-c for c in K.centroid))


def inclusion_in_nK(K: Polytope) -> bool:
    """True that -K0 lies in n K0 for the centroid-centered K0; always holds.

    A failure would be a bug in the geometry kernel, so it raises instead of
    returning False.
    """
    k0 = center_at_centroid(K)
    ok = includes(scale(k0, K.dim), reflect(k0))
    if not ok:
        raise TheoremViolation("-K escaped nK for a centroid-centered body")
    return ok


def tightness_profile(K: Polytope) -> TightnessProfile:
    """Exact lhs/rhs/tight data at every facet normal of the centered body."""
    k0 = center_at_centroid(K)
    n = K.dim
    entries = []
    for f in k0.facets:
        lhs = support(k0, tuple(-c for c in f.normal))
        rhs = n * f.offset
        if lhs > rhs:
            raise TheoremViolation("support comparison failed on a facet normal")
        entries.append(TightnessEntry(f.normal, lhs, rhs, lhs == rhs))
    return TightnessProfile(tuple(entries))


def directional_moment(K: Polytope, w, center: bool = True) -> Rat:
    """Exact integral of t * s(t) over the section profile along w.

    By default the body is centered at its centroid first, which makes the
    moment vanish exactly; with center=False the raw moment of K as given is
    returned (it equals Vol(K) times the centroid coordinate along w).
    """
    body = center_at_centroid(K) if center else K
    return section_profile(body, as_vector(w)).moment()


def width(K: Polytope, w) -> Rat:
    """h_K(w) + h_K(-w): the extent of K along w, translation invariant."""
    v = as_vector(w)
    return support(K, v) + support(K, tuple(-c for c in v))


def simplex_cone_volume_identity(K: Polytope) -> bool:
    """For a simplex centered at its centroid, every facet satisfies
    (1/n) h_K0(u) mu = Vol(K) / (n+1) in the scaled normal form."""
    if len(K.vertices) != K.dim + 1:
        raise ValueError("the cone-volume identity is only asserted for simplices")
    k0 = center_at_centroid(K)
    n = K.dim
    target = k0.volume / (n + 1)
    return all(Fraction(f.offset * f.measure, n) == target for f in k0.facets)
