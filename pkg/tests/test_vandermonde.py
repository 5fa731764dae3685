import random

import pytest
from sympy import QQ, QQ_I
from sympy.combinatorics import Permutation

from errors import ConfigurationError, PermutationError
from vandermonde import (
    RationalComplexConfiguration,
    permute,
    trivialization,
    vandermonde_determinant,
    vandermonde_matrix,
    vandermonde_trivialization_check,
)


def config(*points):
    return RationalComplexConfiguration(tuple(QQ_I.convert(p) for p in points))


def random_config(rng, n):
    points = set()
    while len(points) < n:
        points.add(QQ_I(QQ(rng.randint(-9, 9), rng.randint(1, 4)), QQ(rng.randint(-9, 9), rng.randint(1, 4))))
    return RationalComplexConfiguration(tuple(points))


def test_two_point_example():
    c = RationalComplexConfiguration.parse("0, 1")
    assert vandermonde_determinant(c) == QQ_I(1, 0)
    assert trivialization(c, [1, 2]) == (QQ_I(3, 0), QQ_I(2, 0))
    assert vandermonde_trivialization_check(c, Permutation([1, 0]), [1, 2])


def test_gaussian_points():
    c = RationalComplexConfiguration.parse("i, -i, 1/2")
    assert str(c) == "i, -i, 1/2"
    expected = (c.points[1] - c.points[0]) * (c.points[2] - c.points[0]) * (c.points[2] - c.points[1])
    assert vandermonde_determinant(c) == expected
    assert vandermonde_matrix(c).to_list()[2][0] == QQ_I(-1, 0)


def test_identity_and_three_cycle():
    c = config(1, 2, 3)
    assert vandermonde_trivialization_check(c, Permutation(list(range(3))), [1, 0, 0])
    cycle = Permutation([[0, 1, 2]], size=3)
    assert c.permuted(cycle).points == (QQ_I(3, 0), QQ_I(1, 0), QQ_I(2, 0))
    assert vandermonde_trivialization_check(c, cycle, [5, QQ_I(0, 1), -1])


def test_permuting_points_changes_determinant_by_the_sign():
    rng = random.Random(17)
    for _ in range(20):
        n = rng.randint(2, 5)
        c = random_config(rng, n)
        perm = Permutation(rng.sample(range(n), n))
        det = vandermonde_determinant(c)
        assert vandermonde_determinant(c.permuted(perm)) == det * perm.signature()


def test_random_configurations_are_equivariant():
    rng = random.Random(29)
    for _ in range(100):
        n = rng.randint(1, 8)
        c = random_config(rng, n)
        perm = Permutation(rng.sample(range(n), n))
        x = [QQ_I(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)]
        assert vandermonde_trivialization_check(c, perm, x)


def test_repeated_points_are_rejected():
    with pytest.raises(ConfigurationError, match="point 3"):
        RationalComplexConfiguration.parse("0, 1, 0")
    with pytest.raises(ConfigurationError):
        RationalComplexConfiguration(())


def test_size_mismatches():
    c = config(0, 1)
    with pytest.raises(ConfigurationError):
        trivialization(c, [1])
    with pytest.raises(PermutationError):
        permute(Permutation([1, 0, 2]), (1, 2))


def test_permute_moves_entry_j_to_perm_j():
    assert permute(Permutation([2, 0, 1]), ("a", "b", "c")) == ("b", "c", "a")
