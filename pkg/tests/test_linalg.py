import random

import pytest

from grskit.gf import Field, field_from_order
from grskit.linalg import (Matrix, identity, matmul, vstack, submatrix,
                           echelonize, rref, rank, det, minor, right_kernel,
                           is_zero)
from .conftest import COUNTEREXAMPLE_ROWS


def random_matrix(field, rows, cols, rng):
    return Matrix(field, [[rng.randrange(field.q) for _ in range(cols)]
                          for _ in range(rows)])


def test_echelonize_identity(f11):
    m = identity(f11, 4)
    out, ok = echelonize(m)
    assert ok and out.data == m.data


def test_echelonize_already_systematic_is_fixed_point(f11):
    m = Matrix(f11, COUNTEREXAMPLE_ROWS)
    out, ok = echelonize(m)
    assert ok and out.data == m.data


def test_echelonize_rank_deficient_leading_block(f11):
    m = Matrix(f11, [[1, 1, 3], [2, 2, 5]])  # first two columns proportional
    out, ok = echelonize(m)
    assert not ok


def test_echelonize_idempotent(f11):
    rng = random.Random(0)
    for _ in range(25):
        m = random_matrix(f11, 3, 6, rng)
        out, ok = echelonize(m)
        if ok:
            again, ok2 = echelonize(out)
            assert ok2 and again.data == out.data


def test_det_basics(f11):
    assert det(identity(f11, 3)) == 1
    a, b = 4, 9
    vdm = Matrix(f11, [[1, 1], [a, b]])
    assert det(vdm) == f11.sub(b, a)


@pytest.mark.parametrize("q", [5, 8, 16])
def test_det_multiplicative(q):
    f = field_from_order(q)
    rng = random.Random(q)
    for _ in range(100):
        a = random_matrix(f, 4, 4, rng)
        b = random_matrix(f, 4, 4, rng)
        assert f.mul(det(a), det(b)) == det(matmul(a, b))


def test_rank_plus_nullity(f11):
    rng = random.Random(1)
    for _ in range(40):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(rows, 8)
        m = random_matrix(f11, rows, cols, rng)
        k = right_kernel(m)
        assert rank(m) + k.rows == cols
        if k.rows:
            assert is_zero(matmul(m, k.transpose()))
            assert rank(k) == k.rows


def test_minor_and_submatrix(f11):
    m = Matrix(f11, [[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    assert minor(m, (0, 1), (0, 1)) == f11.sub(f11.mul(1, 5), f11.mul(2, 4))
    with pytest.raises(ValueError):
        minor(m, (0, 1), (0,))
    s = submatrix(m, (0, 2), (1, 2))
    assert s.data == ((2, 3), (8, 10))


def test_matmul_shape_errors(f11):
    a = Matrix(f11, [[1, 2]])
    b = Matrix(f11, [[1, 2]])
    with pytest.raises(ValueError):
        matmul(a, b)
    f5 = Field(5)
    with pytest.raises(ValueError):
        matmul(a, Matrix(f5, [[1], [2]]))


def test_rref_pivots(f11):
    m = Matrix(f11, [[0, 1, 2], [0, 2, 4]])
    red, pivots = rref(m)
    assert pivots == (1,)
    assert red.data[0] == (0, 1, 2)


def test_vstack_and_validation(f11):
    a = Matrix(f11, [[1, 2]])
    assert vstack(a, a).rows == 2
    with pytest.raises(ValueError):
        Matrix(f11, [[1, 2], [3]])
    with pytest.raises(ValueError):
        Matrix(f11, [[1, 12]])
    with pytest.raises(ValueError):
        Matrix(f11, [], cols=None)
