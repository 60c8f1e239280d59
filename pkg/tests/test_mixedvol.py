import random
from fractions import Fraction as F
from math import comb

import pytest

from godbersen import (
    DimensionMismatch,
    build_hull,
    godbersen_report,
    minkowski_sum,
    mv_first,
    mv_profile,
    reflect,
    scale,
    standard_simplex,
    translate,
    unit_cube,
)
from tests.test_geometry import TRIANGLE, SQUARE, random_polytope


class TestMvFirst:
    def test_self_pair_is_volume(self):
        tri = build_hull(TRIANGLE)
        assert mv_first(tri, tri) == tri.volume == F(1, 2)

    def test_triangle_reflection(self):
        # facet formula by hand: (1/2)(1*1 + 1*1 + 0*1) = 1 = n Vol
        tri = build_hull(TRIANGLE)
        assert mv_first(reflect(tri), tri) == 1

    def test_simplex_reflection(self):
        s = standard_simplex(3)
        assert mv_first(reflect(s), s) == F(1, 2) == 3 * s.volume

    def test_point_first_argument_vanishes(self):
        # Minkowski relation: the scaled normals weighted by mu sum to zero
        tri = build_hull(TRIANGLE)
        assert mv_first((F(3), F(-2)), tri) == 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            mv_first(unit_cube(3), build_hull(SQUARE))


class TestMvProfile:
    def test_equal_bodies(self):
        tri = build_hull(TRIANGLE)
        prof = mv_profile(tri, tri)
        assert prof.coeffs == (F(1, 2), F(1, 2), F(1, 2))

    def test_triangle_difference_profile(self):
        # oracle: Vol(K + (-K)) = 3 for the difference hexagon, so
        # 3 = 1/2 + 2 m1 + 1/2 forces m1 = 1
        tri = build_hull(TRIANGLE)
        hexvol = minkowski_sum(tri, reflect(tri)).volume
        m1 = (hexvol - tri.volume - tri.volume) / 2
        prof = mv_profile(tri, reflect(tri))
        assert prof.coeffs == (F(1, 2), m1, F(1, 2)) == (F(1, 2), F(1), F(1, 2))

    def test_square_difference_profile(self):
        sq = build_hull(SQUARE)
        prof = mv_profile(sq, reflect(sq))
        assert prof.coeffs == (F(1), F(1), F(1))

    def test_point_second_argument(self):
        tri = build_hull(TRIANGLE)
        prof = mv_profile(tri, (F(5), F(7)))
        assert prof.coeffs == (F(1, 2), F(0), F(0))

    def test_reversal_symmetry(self):
        rng = random.Random(41)
        for dim in (2, 3):
            a = random_polytope(rng, dim, dim + 3)
            b = random_polytope(rng, dim, dim + 3)
            assert mv_profile(a, b).coeffs == tuple(
                reversed(mv_profile(b, a).coeffs))

    def test_first_coefficient_cross_check(self):
        # mv_profile verifies m1 against the facet formula internally; also
        # check the symmetric coefficient here
        rng = random.Random(42)
        for dim in (2, 3):
            a = random_polytope(rng, dim, dim + 3)
            b = random_polytope(rng, dim, dim + 3)
            prof = mv_profile(a, b)
            assert prof.coeffs[1] == mv_first(b, a)
            assert prof.coeffs[dim - 1] == mv_first(a, b)
            assert prof.coeffs[0] == a.volume and prof.coeffs[dim] == b.volume
            assert all(m >= 0 for m in prof.coeffs)

    def test_expansion_identity(self):
        # Vol(K + tL) must equal sum_j C(n,j) m_j t^j at a fresh node t = 7
        rng = random.Random(43)
        a = random_polytope(rng, 2, 6)
        b = random_polytope(rng, 2, 6)
        prof = mv_profile(a, b)
        direct = minkowski_sum(a, scale(b, 7)).volume
        assert direct == sum(comb(2, j) * prof.coeffs[j] * 7 ** j for j in range(3))


class TestGodbersenReport:
    def test_triangle_equality(self):
        rep = godbersen_report(build_hull(TRIANGLE))
        assert rep.is_simplex
        assert rep.entry(1).ratio == 1
        assert rep.entry(1).mixed == 1 and rep.entry(1).binom == 2

    def test_square_ratio(self):
        rep = godbersen_report(build_hull(SQUARE))
        assert not rep.is_simplex
        assert rep.entry(1).ratio == F(1, 2)

    def test_simplex3_lambda_grid_value(self):
        # closed form at lambda = j/n = 1/3: (1/3)(2/3)^2 * (1/2) = 2/27 <= 1/6
        rep = godbersen_report(standard_simplex(3))
        e = rep.entry(1)
        assert e.mixed == F(1, 2)
        assert F(1, 3) * F(2, 3) ** 2 * e.mixed == F(2, 27) <= F(1, 6)
        assert e.artstein_ok
        assert e.bound_nmin == 3 and e.nmin_ok

    def test_translation_invariance(self):
        rng = random.Random(44)
        for dim in (2, 3):
            body = random_polytope(rng, dim, dim + 3)
            t = tuple(F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(dim))
            assert godbersen_report(body) == godbersen_report(translate(body, t))

    def test_ratios_bounded_for_proven_cases(self):
        rng = random.Random(45)
        for dim in (2, 3):
            for _ in range(10):
                body = random_polytope(rng, dim, dim + 4)
                rep = godbersen_report(body)
                assert rep.entry(1).ratio <= 1
                assert rep.entry(dim - 1).ratio <= 1
                if rep.entry(1).ratio == 1:
                    assert len(body.vertices) == dim + 1
