#!/usr/bin/python3

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from glab.errors import DimensionMismatchError, FieldMismatchError
from glab.exact.field import GF, QQ
from glab.exact.matrix import Matrix, kernel_basis, rank, rref


small_ints = st.integers(min_value=-5, max_value=5)


@st.composite
def int_matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(min_value=1, max_value=max_rows))
    c = draw(st.integers(min_value=1, max_value=max_cols))
    return [[draw(small_ints) for _ in range(c)] for _ in range(r)]


def test_rank_examples():
    assert rank(Matrix.identity(3)) == 3
    assert rank(Matrix.zeros(2, 2)) == 0
    assert rank(Matrix([[1, 2], [2, 4]])) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(2)).nrows == 0
    k = kernel_basis(Matrix([[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 0, 1]]))
    assert k.nrows == 1
    assert k.row(0) == (0, 1, -1, 0)
    k = kernel_basis(Matrix([[1, 1]]))
    assert k.row(0) == (1, -1)


def test_rref_examples():
    assert rref(Matrix([[2, 4], [0, 3]])) == Matrix.identity(2)
    z = Matrix([[0, 0], [0, 0]])
    assert rref(z) == z
    assert rref(Matrix([[1, 2, 3], [2, 4, 6]])) == Matrix([[1, 2, 3], [0, 0, 0]])


def test_field_mismatch():
    with pytest.raises(FieldMismatchError):
        Matrix([[GF(5)(1), GF(7)(1)]], GF(5))
    with pytest.raises(FieldMismatchError):
        Matrix.identity(2) @ Matrix.identity(2, GF(5))


def test_rational_entries_are_not_prime_field_elements():
    F = GF(7)
    with pytest.raises(FieldMismatchError):
        Matrix([[F(1), Fraction(1, 2)], [F(3), F(6)]], F)
    assert Matrix([[F(1), Fraction(4)], [3, 6]], F) == Matrix([[1, 4], [3, 6]], F)
    assert Matrix([[F(1), F(Fraction(1, 2))]], F) == Matrix([[1, 4]], F)


def test_ragged_and_empty():
    with pytest.raises(DimensionMismatchError):
        Matrix([[1, 2], [3]])
    with pytest.raises(DimensionMismatchError):
        Matrix([])
    e = Matrix.empty(4)
    assert e.rank() == 0
    assert e.kernel_basis().nrows == 4


def test_det_and_reduce():
    m = Matrix([[2, 1], [1, 1]])
    assert m.det() == 1
    assert Matrix([[1, 2], [2, 4]]).det() == 0
    assert Matrix([[1, 0, 0], [0, 1, 0]]).reduce_vector([3, 4, 5]) == [0, 0, 5]


def test_transpose_shapes():
    m = Matrix([[1, 2, 3]])
    t = m.transpose()
    assert (t.nrows, t.ncols) == (3, 1)
    assert t.transpose() == m


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_rank_agrees_with_sympy(rows):
    m = Matrix(rows)
    assert m.rank() == sympy.Matrix(rows).rank()
    assert m.rank() == m.transpose().rank()


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_rank_nullity(rows):
    m = Matrix(rows)
    k = m.kernel_basis()
    assert m.rank() + k.nrows == m.ncols
    for v in k.rows():
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in m.rows())
    assert k.rref() == k


@settings(max_examples=100, deadline=None)
@given(int_matrices())
def test_rref_idempotent_and_row_space(rows):
    m = Matrix(rows)
    r = m.rref()
    assert r.rref() == r
    assert m.stack(r).rank() == m.rank() == r.rank()
    for row in r.rows():
        for x in row:
            assert isinstance(x, Fraction) and x.denominator > 0


@settings(max_examples=50, deadline=None)
@given(int_matrices(max_rows=4, max_cols=4))
def test_prime_field_rank_bounded_by_rational(rows):
    F = GF(7)
    assert Matrix(rows, F).rank() <= Matrix(rows, QQ).rank()


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_agrees_with_sympy(rows):
    assert Matrix(rows).det() == int(sympy.Matrix(rows).det())
