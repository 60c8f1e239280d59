import random
from fractions import Fraction

import pytest

from godbersen.errors import SingularMatrix
from godbersen.linalg import (
    affine_rank,
    det,
    int_det,
    int_rank,
    normal_to_span,
    primitive,
    scale_to_integers,
    solve_linear,
)


def test_int_det_known_values():
    assert int_det([[1, 3, 5], [2, 0, 4], [4, 2, 7]]) == 18
    assert int_det([[2, 1, 3, 0], [1, 0, 2, 3], [3, 2, 0, 1], [2, 0, 1, 3]]) == -24
    assert int_det([[1, 2], [2, 4]]) == 0


def test_int_det_matches_permutation_expansion():
    # oracle: Leibniz expansion over all permutations, 4x4
    from itertools import permutations

    rng = random.Random(3)
    for _ in range(25):
        m = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        expected = 0
        for perm in permutations(range(4)):
            sign = 1
            for i in range(4):
                for j in range(i + 1, 4):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = 1
            for i in range(4):
                term *= m[i][perm[i]]
            expected += sign * term
        assert int_det(m) == expected
        assert det(m) == expected


def test_rank():
    assert int_rank([[1, 0], [0, 1]]) == 2
    assert int_rank([[1, 2], [2, 4], [3, 6]]) == 1
    assert int_rank([]) == 0
    assert affine_rank([(0, 0), (1, 0), (2, 0)]) == 1
    assert affine_rank([(0, 0), (1, 0), (0, 1)]) == 2


def test_normal_to_span_is_orthogonal():
    rng = random.Random(11)
    for n in (2, 3, 4, 5):
        for _ in range(20):
            rows = [tuple(rng.randint(-6, 6) for _ in range(n))
                    for _ in range(n - 1)]
            w = normal_to_span(rows, n)
            for r in rows:
                assert sum(a * b for a, b in zip(w, r)) == 0
            if int_rank(rows) == n - 1:
                assert any(c != 0 for c in w)
            else:
                assert all(c == 0 for c in w)


def test_primitive_and_scaling():
    assert primitive((4, -6, 8)) == (2, -3, 4)
    assert primitive((0, 0)) == (0, 0)
    pts, mult = scale_to_integers([(Fraction(1, 2), Fraction(2, 3))])
    assert mult == 6 and pts == [(3, 4)]


def test_solve_linear():
    x = solve_linear(((2, 1), (1, 3)), (5, 10))
    assert x == (Fraction(1), Fraction(3))
    with pytest.raises(SingularMatrix):
        solve_linear(((1, 2), (2, 4)), (1, 2))
