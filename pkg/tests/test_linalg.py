import pytest
from hypothesis import given, settings, strategies as st

from delsarte.errors import DimensionError, DomainError
from delsarte.linalg import IntMatrix, adjugate, as_matrix, determinant, kernel_mod, smith_normal_form

from oracles import brute_kernel, laplace_det

QD84 = [[83, 1, 0, 0, 0], [0, 84, 0, 0, 0], [0, 0, 7, 0, 0], [0, 0, 0, 3, 0], [0, 0, 0, 0, 2]]


def matrices(rows, cols, lo=-9, hi=9):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def test_determinant_examples():
    assert determinant(IntMatrix.identity(5, 5)) == 3125
    assert determinant([[-7]]) == -7
    assert determinant([[0, 1], [1, 0]]) == -1


def test_quasidiagonal_determinant_matches_cofactor_expansion():
    assert laplace_det(QD84) == 292824
    assert determinant(QD84) == 292824


def test_determinant_rejects_rectangular():
    with pytest.raises(DimensionError):
        determinant([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(DimensionError):
        adjugate([[1, 2]])


@settings(max_examples=300, deadline=None)
@given(matrices(4, 4))
def test_determinant_agrees_with_laplace(rows):
    assert determinant(rows) == laplace_det(rows)


def test_big_entries_stay_exact():
    rows = [[10**30 + i * j for j in range(4)] for i in range(4)]
    rows[3][3] += 1
    assert determinant(rows) == laplace_det(rows)


def test_adjugate_examples():
    assert adjugate([[1, 2], [3, 4]]).tolist() == [[4, -2], [-3, 1]]
    assert adjugate(IntMatrix.identity(3)).tolist() == IntMatrix.identity(3).tolist()
    assert adjugate(IntMatrix.identity(5, 5)).tolist() == IntMatrix.identity(5, 625).tolist()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: matrices(n, n)))
def test_adjugate_identity(rows):
    m = as_matrix(rows)
    n = m.nrows
    assert (m @ adjugate(m)).tolist() == IntMatrix.identity(n, determinant(m)).tolist()


def _check_snf(rows):
    m = as_matrix(rows)
    snf = smith_normal_form(m)
    d = snf.diagonal_matrix()
    assert (snf.left @ m @ snf.right).tolist() == d.tolist()
    assert abs(determinant(snf.left)) == 1
    assert abs(determinant(snf.right)) == 1
    assert all(v >= 0 for v in snf.diag)
    nz = [v for v in snf.diag if v]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert list(snf.diag[:len(nz)]) == nz  # zeros trail
    return snf


def test_snf_examples():
    assert tuple(_check_snf([[8, 0, 0, 0, 0], [0, 8, 0, 0, 0], [0, 0, 8, 0, 0],
                             [0, 0, 0, 8, 0], [0, 0, 0, 0, 2]]).diag) == (2, 8, 8, 8, 8)
    assert tuple(_check_snf([[0, 0], [0, 0]]).diag) == (0, 0)
    assert tuple(_check_snf([[2, 1], [0, 3]]).diag) == (1, 6)


def test_snf_is_deterministic():
    a = smith_normal_form(QD84)
    b = smith_normal_form(QD84)
    assert a == b


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.integers(1, 4).flatmap(lambda c: matrices(r, c, -20, 20))))
def test_snf_properties(rows):
    _check_snf(rows)


def test_kernel_examples():
    k = kernel_mod(IntMatrix.identity(5, 5), 3125)
    assert k.order == 3125
    assert all(v % 625 == 0 for g in k.generators for v in g)
    assert set(kernel_mod(IntMatrix.identity(5), 7)) == {(0,) * 5}
    assert set(kernel_mod([[2, 1], [0, 3]], 6)) == brute_kernel([[2, 1], [0, 3]], 6)


def test_kernel_rejects_small_modulus():
    with pytest.raises(DomainError):
        kernel_mod([[1]], 1)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda r: st.integers(1, 3).flatmap(lambda c: matrices(r, c))),
       st.integers(2, 30))
def test_kernel_matches_brute_force(rows, modulus):
    if len(rows[0]) == 3 and modulus > 20:
        modulus = 20
    k = kernel_mod(rows, modulus)
    got = list(k)
    assert len(got) == k.order
    assert set(got) == brute_kernel(rows, modulus)
