#!/usr/bin/python3

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from glab.errors import DimensionMismatchError, FieldMismatchError, NotHomogeneousError, PolyParseError
from glab.exact.field import GF, QQ
from glab.exact.matrix import Matrix
from glab.poly.multipoly import (MultiPoly, PolyMatrix, coefficient_rank, monomials_of_degree,
                                 parse_poly, poly_eval)


def projected_veronese_2():
    return PolyMatrix.from_strings([['t0', 't1', 't2', '0'], ['0', 't0', 't1', 't2']], 3)


def random_poly(rng, nvars, degree, field, nterms=4):
    terms = {}
    for _ in range(nterms):
        d = int(rng.integers(0, degree + 1))
        mons = monomials_of_degree(nvars, d)
        e = mons[int(rng.integers(0, len(mons)))]
        terms[e] = int(rng.integers(-9, 10))
    return MultiPoly(terms, nvars, field)


def test_poly_eval_examples():
    assert poly_eval(parse_poly('t0*t1', 2), [1, 2]) == 2
    assert poly_eval(parse_poly('t0^2', 2), [0, 5]) == 0
    minors = projected_veronese_2().minors2()
    assert minors[(1, 2)] == parse_poly('t1^2 - t0*t2', 3)
    assert poly_eval(minors[(1, 2)], [1, 1, 1]) == 0


def test_poly_eval_length_mismatch():
    with pytest.raises(DimensionMismatchError):
        poly_eval(parse_poly('t0', 2), [1])


def test_no_zero_coefficients_stored():
    p = parse_poly('t0 - t0 + t1', 2)
    assert p.terms == {(0, 1): 1}
    assert (p - p).is_zero()
    assert (p - p).degree() == -1


def test_degree_is_additive():
    p = parse_poly('t0^2 + t1', 2)
    q = parse_poly('t0*t1^3 - 1', 2)
    assert (p * q).degree() == p.degree() + q.degree()


def test_parse_and_format():
    p = parse_poly('3/2*t0^2*t1 - t2 + 5', 3)
    assert p.coefficient((2, 1, 0)) == Fraction(3, 2)
    assert p.coefficient((0, 0, 0)) == 5
    assert parse_poly(p.format(), 3) == p
    assert str(parse_poly('-t0 + t1', 2)) == '-t0 + t1'
    assert parse_poly('s^2 - s*u', 2, names=['s', 'u']).format(['s', 'u']) == 's^2 - s*u'
    assert parse_poly('0', 2).is_zero()


def test_parse_errors():
    with pytest.raises(PolyParseError):
        parse_poly('t0 + (t1)', 2)
    with pytest.raises(PolyParseError):
        parse_poly('t7', 2)
    with pytest.raises(PolyParseError):
        parse_poly('', 2)
    with pytest.raises(PolyParseError):
        parse_poly('1/7*t0', 1, GF(7))


def test_prime_field_format_uses_signed_representatives():
    p = parse_poly('t0 - t1', 2, GF(11))
    assert p.format() == 't0 - t1'


def test_rational_coefficients_are_not_prime_field_elements():
    F = GF(7)
    with pytest.raises(FieldMismatchError):
        MultiPoly({(1, 0): Fraction(1, 2)}, 2, F)
    with pytest.raises(FieldMismatchError):
        parse_poly('t0', 2, F) * Fraction(1, 3)
    assert parse_poly('1/2*t0', 2, F) == MultiPoly({(1, 0): 4}, 2, F)
    assert parse_poly('1/2*t0', 2).over(F) == MultiPoly({(1, 0): 4}, 2, F)


def test_coefficient_rank_examples():
    assert coefficient_rank([parse_poly(s, 2) for s in ('t0^2', 't0*t1', 't1^2')], 2) == 3
    assert coefficient_rank([parse_poly('t0^2', 2), parse_poly('2*t0^2', 2)], 2) == 1
    assert coefficient_rank(list(projected_veronese_2().minors2().values()), 2) == 6
    with pytest.raises(NotHomogeneousError):
        coefficient_rank([parse_poly('t0^2 + t1', 2)], 2)


def test_grlex_order():
    assert monomials_of_degree(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomials_of_degree(4, 2)) == 10


def test_derivative_and_compose():
    p = parse_poly('t0^3*t1 + 2*t1', 2)
    assert p.derivative(0) == parse_poly('3*t0^2*t1', 2)
    assert p.derivative(1) == parse_poly('t0^3 + 2', 2)
    s, u = MultiPoly.variables(2)
    q = p.compose([s + u, s])
    assert poly_eval(q, [1, 1]) == poly_eval(p, [2, 1])


def test_polymatrix_evaluate_and_multiply():
    m = projected_veronese_2()
    e = m.evaluate([1, 2, 3])
    assert e == Matrix([[1, 2, 3, 0], [0, 1, 2, 3]])
    assert m.row_degrees() == [1, 1]
    assert m.is_linear() and m.is_row_homogeneous()
    c = Matrix([[1, 0], [0, 1], [0, 0], [0, 0]])
    assert m.right_multiply(c).evaluate([1, 2, 3]) == Matrix([[1, 2], [0, 1]])


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_euler_identity(seed):
    rng = np.random.default_rng(seed)
    F = GF(1009)
    d = int(rng.integers(1, 4))
    mons = monomials_of_degree(3, d)
    p = MultiPoly({mons[int(rng.integers(0, len(mons)))]: int(rng.integers(1, 50)) for _ in range(4)}, 3, F)
    t = MultiPoly.variables(3, F)
    euler = sum((t[i] * p.derivative(i) for i in range(3)), MultiPoly.zero(3, F))
    assert euler == p * d


def test_field_is_tracked():
    assert parse_poly('t0', 1, GF(5)).field == GF(5)
    assert parse_poly('t0', 1).field == QQ
