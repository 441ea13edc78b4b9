import numpy as np
import pytest

from gemmlab.reference import (
    KINDS,
    TestMatrixSpec,
    gemm_error_bound,
    gen_matrix,
    oracle_lu,
    permute_rows,
)


@pytest.mark.parametrize("kind", KINDS)
def test_generation_is_reproducible_and_column_major(kind):
    spec = TestMatrixSpec(kind, 42, 17, 9)
    x, y = gen_matrix(spec), gen_matrix(spec)
    assert x.shape == (17, 9) and x.dtype == np.float64 and x.flags.f_contiguous
    assert np.array_equal(x, y)


def test_zero_identity_integer_kinds():
    assert not np.any(gen_matrix(TestMatrixSpec("zero", 1, 5, 4)))
    assert np.array_equal(gen_matrix(TestMatrixSpec("identity", 1, 4, 4)), np.eye(4))
    z = gen_matrix(TestMatrixSpec("integer", 1, 50, 50))
    assert np.array_equal(z, np.round(z)) and z.min() >= -4 and z.max() <= 4
    assert set(np.unique(z)) == set(range(-4, 5))


def test_rank_deficient_kind():
    x = gen_matrix(TestMatrixSpec("rank-deficient", 3, 20, 20))
    assert np.linalg.matrix_rank(x) == 10


def test_different_seeds_differ():
    a = gen_matrix(TestMatrixSpec("uniform", 1, 10, 10))
    b = gen_matrix(TestMatrixSpec("uniform", 2, 10, 10))
    assert not np.array_equal(a, b)


def test_uniform_mean_sanity():
    x = gen_matrix(TestMatrixSpec("uniform", 2024, 1000, 1000))
    assert -0.05 < x.mean() < 0.05
    assert x.min() >= -1.0 and x.max() < 1.0


def test_spec_validation():
    with pytest.raises(ValueError):
        TestMatrixSpec("gaussian", 0, 2, 2)
    with pytest.raises(ValueError):
        TestMatrixSpec("zero", 0, -1, 2)


def test_oracle_lu_examples():
    lower, upper, piv = oracle_lu(np.eye(4))
    assert np.array_equal(lower, np.eye(4)) and np.array_equal(upper, np.eye(4))
    assert list(piv) == [0, 1, 2, 3]
    lower, upper, piv = oracle_lu([[0.0, 1.0], [1.0, 0.0]])
    assert list(piv) == [1, 1] and np.array_equal(lower, np.eye(2)) and np.array_equal(upper, np.eye(2))


def test_oracle_lu_reconstructs():
    a = gen_matrix(TestMatrixSpec("uniform", 9, 30, 30))
    lower, upper, piv = oracle_lu(a)
    assert np.allclose(permute_rows(a, piv), lower @ upper, atol=1e-13)
    assert np.all(np.abs(lower) <= 1.0)
    with pytest.raises(ValueError):
        oracle_lu(np.zeros((2, 3)))


def test_error_bound_shape_and_scale():
    a = np.ones((3, 4), order="F")
    b = np.ones((4, 2), order="F")
    c0 = np.full((3, 2), -2.0, order="F")
    bound = gemm_error_bound(0.5, a, b, 3.0, c0)
    eps = np.finfo(float).eps
    assert bound.shape == (3, 2)
    assert np.allclose(bound, 16 * eps * (0.5 * 4 + 6.0))
