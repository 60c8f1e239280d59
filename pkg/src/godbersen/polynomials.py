"""Dense univariate polynomials with exact rational coefficients.

Coefficient lists are low-degree-first: [c0, c1, c2] is c0 + c1*t + c2*t^2.
Used for section profiles and the concave-function integrals, where every
integration must stay in Q.
"""

from __future__ import annotations

from fractions import Fraction

from .rationals import Rat

Poly = list[Fraction]


def trim(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return trim(out)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p: Poly, c: Rat) -> Poly:
    return trim([a * c for a in p])


def evaluate(p: Poly, t: Rat) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * t + c
    return acc


def derivative(p: Poly) -> Poly:
    return trim([c * i for i, c in enumerate(p)][1:])


def antiderivative(p: Poly) -> Poly:
    return [Fraction(0)] + [c / (i + 1) for i, c in enumerate(p)]


def definite_integral(p: Poly, lo: Rat, hi: Rat) -> Fraction:
    prim = antiderivative(p)
    return evaluate(prim, hi) - evaluate(prim, lo)


def power(p: Poly, k: int) -> Poly:
    out: Poly = [Fraction(1)]
    for _ in range(k):
        out = mul(out, p)
    return out


def interpolate(nodes, values) -> Poly:
    """Exact Lagrange interpolation through distinct rational nodes."""
    assert len(nodes) == len(values)
    result: Poly = []
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        if yi == 0:
            continue
        basis: Poly = [Fraction(yi)]
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            basis = mul(basis, [Fraction(-xj), Fraction(1)])
            basis = scale(basis, Fraction(1, 1) / (Fraction(xi) - Fraction(xj)))
        result = add(result, basis)
    return result
