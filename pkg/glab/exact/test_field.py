#!/usr/bin/python3

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from glab.errors import FieldMismatchError
from glab.exact.field import GF, QQ, ModP, element_field, field_from_tag


def test_rationals_lowest_terms():
    x = QQ(Fraction(6, -4))
    assert x == Fraction(-3, 2)
    assert x.denominator > 0
    assert QQ(3) / QQ(6) == Fraction(1, 2)


def test_prime_field_reduces():
    F = GF(7)
    assert F(10).v == 3
    assert F(-1).v == 6
    assert F('1/2') * 2 == F.one
    assert (F(3) ** -1) * 3 == 1


def test_prime_field_rejects_composites_and_two():
    with pytest.raises(ValueError):
        GF(9)
    with pytest.raises(ValueError):
        GF(2)


def test_mixing_fields_raises():
    with pytest.raises(FieldMismatchError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(FieldMismatchError):
        QQ(GF(5)(1))
    with pytest.raises(FieldMismatchError) as e:
        GF(7)(GF(5)(2))
    assert 'field mismatch' in str(e.value)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF(7)(3) / 0
    with pytest.raises(ZeroDivisionError):
        GF(7)('1/7')


def test_tags():
    assert field_from_tag('Q') is QQ
    assert field_from_tag('GF(101)') == GF(101)
    assert field_from_tag('101') == GF(101)
    assert element_field(ModP(3, 11)) == GF(11)
    assert element_field(Fraction(1, 3)) is QQ


def test_elements_enumeration():
    assert len(GF(5).elements()) == 5
    with pytest.raises(ValueError):
        QQ.elements()


@settings(max_examples=200)
@given(st.integers(), st.integers(), st.integers(min_value=1, max_value=10 ** 6))
def test_mod_p_is_a_field_homomorphism(a, b, c):
    F = GF(1000003)
    q = Fraction(a, c)
    assert F(a) + F(b) == F(a + b)
    assert F(a) * F(b) == F(a * b)
    assert F(q) * c == F(a)
