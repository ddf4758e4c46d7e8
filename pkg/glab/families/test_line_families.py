#!/usr/bin/python3

import pytest

from glab.errors import DegenerateEvaluationError, ProjectionUndefinedError
from glab.exact.field import QQ
from glab.exact.matrix import Matrix
from glab.families.line_families import (LineFamily, ProjectionMap, apply_projection, compressedness, cone_family,
                                         constant_family, double_veronese_check, dual_meet_check, evaluate_line,
                                         hyperplane_section_rank, scroll_dual_family, scroll_fiber_family,
                                         scroll_lift, scroll_lift_report, scroll_line_family, scroll_orthogonality,
                                         union_cap, union_dimension, veronese_family, veronese_projection)
from glab.families.sampling import make_rng
from glab.geometry.grassmann import PluckerVector, plucker
from glab.geometry.proj_space import coordinate_subspace, meet, point, subspace_from_rows
from glab.poly.multipoly import PolyMatrix, parse_poly


def test_veronese_evaluation():
    F = veronese_family(1)
    assert F.evaluate_matrix([1, 2]) == Matrix([[1, 2, 0, 0], [0, 0, 1, 2]])
    G = veronese_family(2)
    assert G.evaluate_matrix([0, 0, 1]) == Matrix([[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 0, 1]])
    assert G.evaluate([0, 0, 1]).dim == 1


def test_veronese_plucker_polys():
    minors = veronese_family(1).plucker_polys()
    expected = ['0', 't0^2', 't0*t1', 't0*t1', 't1^2', '0']
    assert minors == [parse_poly(s, 2) for s in expected]


def test_evaluate_line():
    assert evaluate_line(veronese_family(2), [1, 0, 0]) == coordinate_subspace([0, 3], 5)
    with pytest.raises(DegenerateEvaluationError):
        evaluate_line(veronese_family(2), [0, 0, 0])
    projected = apply_projection(veronese_projection(1), veronese_family(1))
    assert evaluate_line(projected, [1, 1]) == subspace_from_rows(Matrix([[1, 1, 0], [0, 1, 1]]))


def test_veronese_projection_center():
    assert veronese_projection(1).center == point([0, 1, -1, 0])
    c2 = veronese_projection(2).center
    assert c2.dim == 1
    assert c2.contains_point([0, 1, 0, -1, 0, 0])
    assert c2.contains_point([0, 0, 1, 0, -1, 0])
    for n in range(1, 6):
        assert veronese_projection(n).center.dim == n - 1


def test_apply_projection_reproduces_the_projected_matrix():
    p1 = apply_projection(veronese_projection(1), veronese_family(1))
    assert p1.matrix.to_strings() == [['t0', 't1', '0'], ['0', 't0', 't1']]
    p2 = apply_projection(veronese_projection(2), veronese_family(2))
    assert p2.matrix.to_strings() == [['t0', 't1', 't2', '0'], ['0', 't0', 't1', 't2']]
    same = apply_projection(ProjectionMap.identity(3), veronese_family(1))
    assert same.matrix == veronese_family(1).matrix


def test_apply_projection_rejects_centers_on_every_line():
    cone = cone_family(1)
    with pytest.raises(ProjectionUndefinedError) as e:
        apply_projection(ProjectionMap.from_center(point([1, 0, 0])), cone, trials=5)
    assert 'projection undefined on family' in str(e.value)


@pytest.mark.parametrize('n', [1, 2, 3])
def test_projection_is_functorial_on_plucker_coordinates(n):
    P = veronese_projection(n)
    F = veronese_family(n)
    image = apply_projection(P, F)
    wedge = P.exterior_square()
    for i in range(10):
        rng = make_rng(4, i)
        t = F.random_parameter(rng)
        v = plucker(F.evaluate(t))
        induced = [sum((a * x for a, x in zip(r, v.coords)), QQ.zero) for r in wedge.rows()]
        assert plucker(image.evaluate(t)) == PluckerVector(induced, image.N)


@pytest.mark.parametrize('n, rank', [(1, 3), (2, 6), (3, 10)])
def test_double_veronese(n, rank):
    report = double_veronese_check(n, trials=10, pair_trials=50, seed=1)
    assert report['coefficient_rank']['observed'] == rank
    assert report['pass']
    if n <= 2:
        assert report['injectivity_exhaustive']['clashes'] == 0


def test_scroll_fibers():
    F = scroll_fiber_family(1)
    assert F.evaluate_matrix([1, 0]) == Matrix([[1, 0, 0, 0, 0], [0, 0, 1, 0, 0]])
    a = F.evaluate([1, 0])
    b = F.evaluate([0, 1])
    assert meet(a, b).is_empty()
    assert scroll_fiber_family(2).evaluate_matrix([1, 1]).rank() == 3


def test_scroll_dual_planes():
    D = scroll_dual_family(1)
    a = D.evaluate([1, 0])
    b = D.evaluate([0, 1])
    assert a == coordinate_subspace([1, 3, 4], 4)
    assert meet(a, b) == point([0, 0, 0, 1, 0])


@pytest.mark.parametrize('r', [1, 2, 3, 4])
def test_scroll_orthogonality(r):
    m = scroll_orthogonality(r)
    assert all(p.is_zero() for row in m.entries for p in row)


@pytest.mark.parametrize('r', [1, 2, 3])
def test_dual_planes_meet_in_a_point(r):
    D = scroll_dual_family(r)
    for i in range(30):
        rng = make_rng(8, i)
        _, a = D.sample(rng)
        _, b = D.sample(rng)
        if a == b:
            continue
        assert meet(a, b).dim == 0


def test_scroll_lift_r1():
    lifted, p = scroll_lift(1)
    assert lifted.matrix.to_strings() == [
        ['t1', '-t0', '0', '0', '0', '0'],
        ['0', '0', 't1', '-t0', '0', '0'],
        ['0', '0', '0', '0', 't1', '-t0']]
    assert p.center == point([0, 0, 0, 1, -1, 0])


@pytest.mark.parametrize('r', [1, 2, 3])
def test_scroll_lift_report(r):
    report = scroll_lift_report(r)
    assert report['identity']
    assert report['span_rank'] == 2 * r + 4
    assert report['pass']


@pytest.mark.parametrize('n', [1, 2, 3, 4])
def test_veronese_union_dimension(n):
    F = veronese_family(n)
    assert union_dimension(F, trials=3, seed=2) == n + 1
    assert union_cap(F) == n + 1


def test_scroll_union_and_compressedness():
    assert union_dimension(scroll_dual_family(1), trials=3) == 3
    lines = scroll_line_family(1)
    assert lines.dim == 3
    report = compressedness(lines, trials=3, seed=1)
    assert report['union_dimension'] == 3
    assert report['compressed']
    assert report['hyperplane_section_rank'] < lines.dim


def test_constant_and_cone_families():
    c = constant_family(coordinate_subspace([0, 1], 3))
    assert union_dimension(c, trials=2) == 1
    cone = cone_family(2)
    assert union_dimension(cone, trials=3) == 3


def test_veronese_hyperplane_section_is_generically_finite():
    F = veronese_family(2)
    assert hyperplane_section_rank(F, seed=3, trials=3) == F.dim
    assert not compressedness(F, trials=3)['compressed']


@pytest.mark.parametrize('r', [1, 2])
def test_dual_meet_check(r):
    report = dual_meet_check(r, trials=10)
    assert report['pairs'] >= 1
    assert report['not_a_point'] == 0
    assert report['pass']


def test_hyperplane_section_of_a_family_inside_the_sum_hyperplane():
    ## every line lies in x0 + x1 + x2 + x3 = 0 ##
    m = PolyMatrix.from_strings([['t0', 't1', '-t0 - t1', '0'], ['0', 't0', 't1', '-t0 - t1']], 2)
    F = LineFamily(m, 'in the sum hyperplane')
    report = compressedness(F, trials=3, seed=1)
    assert report['union_dimension'] == 2
    assert not report['compressed']
    assert report['hyperplane_section_rank'] == F.dim == 1


def test_dual_meet_check_defaults_to_a_hundred_random_pairs():
    report = dual_meet_check(1)
    assert report['pairs'] >= 100
    assert report['pass']
