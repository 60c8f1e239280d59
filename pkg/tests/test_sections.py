import random
from fractions import Fraction as F

import pytest

from godbersen import ZeroDirection, build_hull, section_profile, standard_simplex, unit_cube
from godbersen.polynomials import evaluate
from godbersen.sections import _cut_fraction
from tests.test_geometry import random_polytope


def test_cube_profile_is_constant_one():
    prof = section_profile(unit_cube(3), (1, 0, 0))
    assert prof.breakpoints == (F(0), F(1))
    assert prof.pieces == ((F(1),),)
    assert prof.integral() == 1


def test_triangle_profile():
    # cumulative volume t - t^2/2, so the density is 1 - t
    prof = section_profile(build_hull([(0, 0), (1, 0), (0, 1)]), (1, 0))
    assert prof.pieces == ((F(1), F(-1)),)
    assert prof.integral() == F(1, 2)


def test_simplex_diagonal_profile():
    # for t in [0,1] the cut {x+y+z <= t} of the standard simplex is the
    # t-dilate, volume t^3/6, so the density is t^2/2
    prof = section_profile(standard_simplex(3), (1, 1, 1))
    assert prof.breakpoints == (F(0), F(1))
    assert prof.pieces == ((F(0), F(0), F(1, 2)),)


def test_zero_direction_rejected():
    with pytest.raises(ZeroDirection):
        section_profile(unit_cube(2), (0, 0))


def test_cut_fraction_closed_forms():
    # segment: fraction below = h / (h + g)
    assert _cut_fraction([F(-3), F(1)]) == F(3, 4)
    # triangle with one vertex below: similar-triangle squared ratio
    assert _cut_fraction([F(-1), F(2), F(2)]) == F(1, 9)
    # two below one above: complement of the similar triangle above
    assert _cut_fraction([F(-1), F(-1), F(2)]) == 1 - F(4, 9)
    assert _cut_fraction([F(1), F(2)]) == 0
    assert _cut_fraction([F(-1), F(-2)]) == 1


def test_integral_equals_volume_and_moment_identity():
    # 200 random (body, direction) pairs; the moment identity
    # integral t s(t) dt = Vol * (centroid . w) is the independent oracle
    rng = random.Random(21)
    pairs = 0
    while pairs < 200:
        dim = rng.choice((2, 2, 3))
        body = random_polytope(rng, dim, dim + 4)
        for _ in range(4):
            w = tuple(rng.randint(-6, 6) for _ in range(dim))
            if all(c == 0 for c in w):
                continue
            prof = section_profile(body, w)
            assert prof.integral() == body.volume
            assert prof.moment() == body.volume * sum(
                F(a) * b for a, b in zip(w, body.centroid))
            pairs += 1


def test_profile_nonnegative_and_continuous():
    rng = random.Random(22)
    for dim in (2, 3, 4):
        body = random_polytope(rng, dim, dim + 3)
        w = tuple(rng.randint(-4, 4) or 1 for _ in range(dim))
        prof = section_profile(body, w)
        for i in range(1, len(prof.breakpoints) - 1):
            t = prof.breakpoints[i]
            left = evaluate(list(prof.pieces[i - 1]), t)
            right = evaluate(list(prof.pieces[i]), t)
            assert left == right
        lo, hi = prof.support_interval()
        for k in range(33):
            t = lo + (hi - lo) * F(k, 32)
            assert prof.value(t) >= 0


def test_values_match_first_principles_slice():
    # oracle: at a level t crossing no vertex, the slice is the hull of the
    # edge crossings; projecting out a coordinate where w_k != 0 divides the
    # Euclidean area by |w_k|/|w|, so s(t) equals the projected hull volume
    # over |w_k|
    rng = random.Random(24)
    for dim in (2, 3):
        for _ in range(5):
            body = random_polytope(rng, dim, dim + 3)
            w = tuple(rng.randint(-4, 4) for _ in range(dim))
            if all(c == 0 for c in w):
                w = (1,) * dim
            prof = section_profile(body, w)
            levels = prof.breakpoints
            for i in range(len(levels) - 1):
                t = (levels[i] + levels[i + 1]) / 2
                crossings = []
                for a, b in body.edges():
                    va, vb = body.vertices[a], body.vertices[b]
                    ha = sum(F(c) * x for c, x in zip(w, va))
                    hb = sum(F(c) * x for c, x in zip(w, vb))
                    if min(ha, hb) < t < max(ha, hb):
                        lam = (t - ha) / (hb - ha)
                        crossings.append(tuple(
                            x + lam * (y - x) for x, y in zip(va, vb)))
                k = max(range(dim), key=lambda c: abs(w[c]))
                proj = [tuple(p[c] for c in range(dim) if c != k)
                        for p in crossings]
                if dim == 2:
                    xs = [p[0] for p in proj]
                    area = max(xs) - min(xs)
                else:
                    area = build_hull(proj).volume
                assert prof.value(t) == area / abs(w[k])


def test_piece_degree_bound():
    rng = random.Random(23)
    for dim in (2, 3, 4):
        body = random_polytope(rng, dim, dim + 3)
        prof = section_profile(body, tuple(1 for _ in range(dim)))
        assert all(len(p) <= dim for p in prof.pieces)
