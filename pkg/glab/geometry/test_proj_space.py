#!/usr/bin/python3

import numpy as np
from hypothesis import given, settings, strategies as st

from glab.exact.field import GF, QQ
from glab.exact.matrix import Matrix
from glab.geometry.proj_space import (Line, ProjSubspace, contains, coordinate_subspace, enumerate_subspaces,
                                      line_meets, meet, point, random_subspace, span, subspace_from_rows,
                                      whole_space)


def e(i, N):
    return [1 if j == i else 0 for j in range(N + 1)]


def veronese_line(t):
    n = len(t)
    return subspace_from_rows(Matrix([list(t) + [0] * n, [0] * n + list(t)]))


def test_subspace_from_rows_examples():
    L = subspace_from_rows(Matrix([e(0, 3), e(1, 3)]))
    assert isinstance(L, Line) and L.dim == 1
    assert L.equations() == Matrix([e(2, 3), e(3, 3)])
    p = subspace_from_rows(Matrix([e(0, 3), [2, 0, 0, 0]]))
    assert p.dim == 0
    v = veronese_line([1, 2])
    assert v.basis == Matrix([[1, 2, 0, 0], [0, 0, 1, 2]])


def test_disjoint_lines_meet_in_the_empty_subspace():
    m = meet(coordinate_subspace([0, 1], 3), coordinate_subspace([2, 3], 3))
    assert m.dim == -1 and m.is_empty()


def test_span_examples():
    a = coordinate_subspace([0, 1], 3)
    b = coordinate_subspace([2, 3], 3)
    assert span(a, b) == whole_space(3)
    assert span(a, a) == a
    s = span(veronese_line([1, 0, 0]), veronese_line([0, 1, 0]))
    assert s.dim == 3 and s.N == 5
    assert contains(s, veronese_line([1, 1, 0]))


def test_meet_scroll_dual_planes():
    a = coordinate_subspace([1, 3, 4], 4)
    b = coordinate_subspace([0, 2, 3], 4)
    assert meet(a, b) == point(e(3, 4))
    assert meet(a, a) == a


def test_contains_and_line_meets():
    L = coordinate_subspace([0, 1], 3)
    assert contains(whole_space(3), L)
    assert not contains(L, point(e(2, 3)))
    assert line_meets(coordinate_subspace([0, 2], 3), L)
    assert not line_meets(coordinate_subspace([2, 3], 3), L)


def test_generic_veronese_lines_miss_the_center():
    ## (y, z) -> (y0, y1 + z0, y2 + z1, z2) has the line {y0 = z2 = 0, y1 = -z0, y2 = -z1} as center ##
    proj = Matrix([[1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 1, 0], [0, 0, 0, 0, 0, 1]])
    center = subspace_from_rows(proj.kernel_basis())
    assert center.dim == 1
    rng = np.random.default_rng(11)
    for _ in range(100):
        t = [QQ.random(rng) for _ in range(3)]
        if t[0] == 0 or t[2] == 0:
            continue
        assert not line_meets(veronese_line(t), center)


def test_random_subspace_dimension():
    rng = np.random.default_rng(3)
    s = random_subspace(5, 2, GF(101), rng)
    assert s.dim == 2 and s.N == 5


def test_enumerate_lines_of_p3_over_f3():
    lines = list(enumerate_subspaces(3, 1, GF(3)))
    assert len(lines) == 130
    assert len(set(lines)) == 130


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1), st.integers(0, 4), st.integers(0, 4))
def test_modular_dimension_law(seed, ka, kb):
    rng = np.random.default_rng(seed)
    F = GF(5)
    a = random_subspace(4, ka, F, rng)
    b = random_subspace(4, kb, F, rng)
    m = meet(a, b)
    s = span(a, b)
    assert s.dim + m.dim == a.dim + b.dim
    assert span(b, a) == s and meet(b, a) == m
    assert contains(a, m) and contains(b, m)
    assert contains(s, a) and contains(s, b)
    if contains(a, b) and contains(b, a):
        assert a == b


def test_canonical_equality():
    a = ProjSubspace([[1, 1, 0], [0, 1, 1]])
    b = ProjSubspace([[1, 2, 1], [2, 3, 1]])
    assert a == b
    assert hash(a) == hash(b)
