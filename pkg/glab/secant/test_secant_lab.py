#!/usr/bin/python3

from fractions import Fraction

import pytest

from glab.errors import HypothesisViolatedError, WitnessError
from glab.families.line_families import cone_family, scroll_line_family, veronese_family
from glab.families.sampling import make_rng
from glab.geometry.proj_space import contains, whole_space
from glab.secant.secant_lab import (containment_oracle, draw_witness, fiber_dimension, general_position_check,
                                    generic_span_dim, secant_defect, secant_map_rank, skewness_check,
                                    span_of_lines, superadditivity_check, witness_space)

FEW = 4


def test_span_of_lines():
    assert span_of_lines(veronese_family(2), [[1, 0, 0], [0, 1, 0]]).dim == 3
    assert span_of_lines(veronese_family(3), [[1, 2, -1, 3], [0, 5, 2, -7], [4, -1, 1, 1]]).dim == 5
    F = veronese_family(2)
    assert span_of_lines(F, [[1, 2, 3]]) == F.evaluate([1, 2, 3])


@pytest.mark.parametrize('n, k, r', [(3, 1, 3), (3, 3, 7), (1, 1, 3), (2, 2, 5)])
def test_generic_span_dim(n, k, r):
    assert generic_span_dim(veronese_family(n), k, trials=FEW) == r


def test_fiber_dimension():
    F = veronese_family(2)
    pi = span_of_lines(F, [[1, 0, 0], [0, 1, 0]])
    assert fiber_dimension(F, pi, [1, 1, 0]) == 1
    with pytest.raises(WitnessError):
        fiber_dimension(F, pi, [0, 0, 1])
    assert fiber_dimension(F, whole_space(5), [1, 2, 3]) == 2


def test_fiber_dimension_on_a_parameter_plane():
    F = veronese_family(3)
    params = [[1, 2, -1, 3], [0, 5, 2, -7], [4, -1, 1, 1]]
    pi = span_of_lines(F, params)
    u = [a + 2 * b - 3 * c for a, b, c in zip(*params)]
    assert fiber_dimension(F, pi, u) == 2


def test_witnesses_lie_in_the_span():
    F = veronese_family(3)
    params = [[1, 2, -1, 3], [0, 5, 2, -7]]
    pi = span_of_lines(F, params)
    space = witness_space(F, pi)
    assert space.nrows == 2
    rng = make_rng(5)
    for _ in range(20):
        assert contains(pi, F.evaluate(draw_witness(F, space, rng)))


@pytest.mark.parametrize('n, k', [(2, 1), (3, 1), (3, 2), (3, 3), (4, 3)])
def test_veronese_secant_table(n, k):
    report = secant_defect(veronese_family(n), k, trials=FEW)
    assert report.witness_rule == 'parameter-span'
    assert report.delta_k == k
    assert report.r_k == min(2 * k + 1, 2 * n + 1)
    assert report.secant_dim == (k + 1) * (n - k)
    assert report.span_fiber_dim == (k + 1) * k
    assert report.consistent
    assert report.to_dict()['witness_failure'] is False


@pytest.mark.parametrize('n, k, expected', [(2, 1, 2), (3, 2, 3), (1, 1, 0)])
def test_secant_map_rank_methods_agree(n, k, expected):
    F = veronese_family(n)
    assert secant_map_rank(F, k, trials=FEW) == expected
    assert secant_map_rank(F, k, trials=FEW, method='plucker') == expected


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_secant_variety_bound(n):
    assert secant_map_rank(veronese_family(n), 1, trials=FEW) <= 2 * n - 2


def test_superadditivity():
    F = veronese_family(3)
    r = superadditivity_check(F, 1, 1, trials=FEW)
    assert (r['delta_i'], r['delta_j'], r['delta_i_plus_j']) == (1, 1, 2)
    assert r['pass'] and r['equality']
    r = superadditivity_check(F, 0, 2, trials=FEW)
    assert r['delta_i'] == 0 and r['pass']


def test_superadditivity_needs_general_position():
    with pytest.raises(HypothesisViolatedError):
        superadditivity_check(cone_family(2), 1, 1, trials=FEW)


def test_general_position():
    report = general_position_check(veronese_family(3), trials=FEW)
    assert report['ranks'] == {1: 3, 2: 5, 3: 7}
    assert report['pass']
    assert not general_position_check(cone_family(2), trials=FEW)['pass']


def test_skewness():
    assert skewness_check(veronese_family(2), trials=100)['fraction'] == 1.0
    assert skewness_check(veronese_family(1), trials=100)['fraction'] == 1.0
    assert skewness_check(cone_family(2), trials=50)['fraction'] == 0.0


def test_skewness_fraction_is_exact():
    report = skewness_check(cone_family(2), trials=3)
    assert report['fraction'] == Fraction(0)
    assert isinstance(report['fraction'], Fraction)
    assert skewness_check(veronese_family(1), trials=3)['fraction'] == Fraction(1)


def test_member_witness_rule_on_nonlinear_families():
    report = secant_defect(scroll_line_family(1), 1, trials=2)
    assert report.witness_rule == 'member'
    assert not report.witness_failure
    assert report.delta_k >= 0


@pytest.mark.parametrize('n, k', [(2, 1), (3, 2)])
def test_containment_oracle(n, k):
    report = containment_oracle(veronese_family(n), k, samples=10)
    assert report['failures'] == 0
    assert report['pass']
