import numpy as np
import pytest

from eaqmds.errors import CapExceeded, DuplicateEvaluationPoint, InvalidCode
from eaqmds.grs import (
    GrsCode,
    generator_matrix,
    gram_rank,
    hermitian_inner,
    hull_dim,
    mds_minor_check,
    min_distance_bruteforce,
    power_inner,
    random_grs,
)
from eaqmds.matrix import Matrix


def test_generator_small_cases(gf9):
    code = GrsCode(gf9, [0, 1], [1, 1], 2)
    assert generator_matrix(code).data.tolist() == [[1, 1], [0, 1]]
    code1 = GrsCode(gf9, [3, 4, 5], [1, 2, 7], 1)
    assert generator_matrix(code1).data.tolist() == [[1, 2, 7]]


def test_rejects_invalid(gf9):
    with pytest.raises(DuplicateEvaluationPoint):
        GrsCode(gf9, [1, 1, 2], [1, 1, 1], 2)
    with pytest.raises(InvalidCode):
        GrsCode(gf9, [1, 2, 3], [1, 0, 1], 2)
    with pytest.raises(InvalidCode):
        GrsCode(gf9, [1, 2, 3], [1, 1, 1], 4)
    code = GrsCode(gf9, [1, 1, 2], [1, 1, 1], 2, allow_duplicates=True)
    assert not code.points_distinct


def test_power_inner_matches_gram(gf25):
    rng = np.random.default_rng(2)
    code = random_grs(gf25, 8, 3, rng)
    G = generator_matrix(code)
    for i in range(3):
        for j in range(3):
            # row j of G is v * a^j, so <row i, row j> pairs a^i with a^(qj)
            assert hermitian_inner(gf25, G.data[i], G.data[j]) == power_inner(gf25, code.a, code.v, j, i)


def test_distance_is_mds(gf9):
    rng = np.random.default_rng(0)
    for _ in range(10):
        code = random_grs(gf9, 6, 3, rng)
        assert min_distance_bruteforce(code) == 4
        assert mds_minor_check(code)


def test_caps(gf25):
    code = random_grs(gf25, 20, 6, np.random.default_rng(0))
    with pytest.raises(CapExceeded):
        min_distance_bruteforce(code, cap=1000)
    with pytest.raises(CapExceeded):
        mds_minor_check(code, cap=10)
    assert mds_minor_check(code, mode="sample", count=30)
    assert mds_minor_check(code, mode="sample", count=0)


def test_rank_deficient_distance(gf9):
    assert min_distance_bruteforce(Matrix(gf9, [[1, 1], [1, 1]])) == 0


def test_hull_identity(gf25):
    rng = np.random.default_rng(9)
    for _ in range(10):
        code = random_grs(gf25, 9, 3, rng)
        assert code.k - hull_dim(code) == gram_rank(code)


def test_with_dimension(gf9):
    code = GrsCode(gf9, [1, 2, 3, 4], [1, 1, 1, 1], 2)
    assert code.with_dimension(3).k == 3
