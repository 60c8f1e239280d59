"""Deterministic polytope generators for experiments and test corpora.

Every generator is a pure function of its GenSpec: the seed fully determines
the output, including the retry sequence when random draws come out
degenerate.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateInput
from .geometry import Polytope, build_hull

KINDS = ("simplex", "cube", "cross_polytope", "random_hull", "random_symmetric")

_NUMERATOR_BOUND = 9
_MAX_RETRIES = 16


@dataclass(frozen=True)
class GenSpec:
    """Recipe for one body.  ``vertex_count`` is the number of points drawn
    (random kinds only); the hull may end up with fewer vertices."""

    kind: str
    dim: int
    vertex_count: int | None = None
    seed: int = 0
    denominator_bound: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; choose from {KINDS}")
        if self.dim < 2:
            raise ValueError("dimension must be at least 2")
        if self.kind == "random_hull":
            if self.vertex_count is None or self.vertex_count < self.dim + 1:
                raise ValueError("random_hull needs vertex_count >= dim+1")
        if self.kind == "random_symmetric":
            # the +-p pairs double the candidate count; the draws only need
            # to span the space
            if self.vertex_count is None or self.vertex_count < self.dim:
                raise ValueError("random_symmetric needs vertex_count >= dim")
        if self.denominator_bound < 1:
            raise ValueError("denominator bound must be positive")


def standard_simplex(n: int) -> Polytope:
    pts = [tuple(Fraction(0) for _ in range(n))]
    pts += [tuple(Fraction(1 if i == j else 0) for i in range(n)) for j in range(n)]
    return build_hull(pts)


def unit_cube(n: int) -> Polytope:
    pts = [tuple(Fraction((mask >> i) & 1) for i in range(n)) for mask in range(2 ** n)]
    return build_hull(pts)


def cross_polytope(n: int) -> Polytope:
    pts = []
    for j in range(n):
        for s in (1, -1):
            pts.append(tuple(Fraction(s if i == j else 0) for i in range(n)))
    return build_hull(pts)


def _random_point(rng: random.Random, dim: int, denom_bound: int):
    return tuple(
        Fraction(rng.randint(-_NUMERATOR_BOUND, _NUMERATOR_BOUND),
                 rng.randint(1, denom_bound))
        for _ in range(dim)
    )


def generate(spec: GenSpec) -> Polytope:
    """Build the body described by ``spec`` deterministically.

    Random kinds retry degenerate draws up to 16 times from the same stream
    before giving up with DegenerateInput.
    """
    if spec.kind == "simplex":
        return standard_simplex(spec.dim)
    if spec.kind == "cube":
        return unit_cube(spec.dim)
    if spec.kind == "cross_polytope":
        return cross_polytope(spec.dim)

    rng = random.Random(spec.seed)
    last_error: DegenerateInput | None = None
    for _ in range(_MAX_RETRIES):
        pts = [_random_point(rng, spec.dim, spec.denominator_bound)
               for _ in range(spec.vertex_count)]
        if spec.kind == "random_symmetric":
            pts = pts + [tuple(-c for c in p) for p in pts]
        try:
            return build_hull(pts)
        except DegenerateInput as err:
            last_error = err
    raise DegenerateInput(
        f"no full-dimensional body after {_MAX_RETRIES} draws: {last_error}")
