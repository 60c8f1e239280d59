"""Exact rational scalars and their wire format.

Every geometric quantity in this package is a ``fractions.Fraction`` (aliased
``Rat``).  Fraction already guarantees the invariants we need: lowest terms,
positive denominator, arbitrary precision, exact arithmetic.  On the wire a
rational is a decimal-free string ``"p/q"`` or ``"k"``; writers emit lowest
terms, readers accept any equivalent fraction.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rat = Fraction

Vector = tuple[Rat, ...]
Point = tuple[Rat, ...]
Matrix = tuple[tuple[Rat, ...], ...]

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Rat:
    """Parse ``"p/q"`` or ``"k"``; decimals and exponents are rejected."""
    s = text.strip()
    if not _RAT_RE.match(s):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(s)


def format_rational(x: Rat) -> str:
    """Lowest-terms string, ``"p/q"`` or ``"k"``."""
    return str(Fraction(x))


def as_rat(x) -> Rat:
    """Coerce int / Fraction / rational string to Rat.  Floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


def as_vector(coords, dim: int | None = None) -> Vector:
    v = tuple(as_rat(c) for c in coords)
    if dim is not None and len(v) != dim:
        raise ValueError(f"expected a vector of length {dim}, got {len(v)}")
    return v


def dot(u, v) -> Rat:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vec_add(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u, c: Rat) -> Vector:
    return tuple(a * c for a in u)


def vec_neg(u) -> Vector:
    return tuple(-a for a in u)


def is_zero_vector(u) -> bool:
    return all(a == 0 for a in u)
