#!/usr/bin/python3

'''
Tangent space of the incidence variety IX of pairs of lines (l1, l2) and
centers Λ with l2 inside <l1, Λ>, at the special point

    l1 = <e0, e1>,  l2 = <e2, e3>,  Λ = <e2, e0 + e3, e4, ..., e_{n+1}>

in P^{2n+1}, computed from jets in the standard charts:

    a_ij   l1 around frame (0, 1),  j = 2..2n+1
    b_ij   l2 around frame (2, 3),  j = 0, 1, 4..2n+1
    x_kj   Λ around frame (2..n+1), j = 0, 1, n+2..2n+1

For i = 0, 1 the rows of l1, row i of l2 and the rows of Λ form an
(n+3)x(2n+2) matrix whose maximal minors vanish on IX; the linear parts of
all those minors cut out the tangent space. It must be

    x_0j = b_0j,  x_1j = a_0j + b_1j   (j = n+2..2n+1)
'''

import logging
from itertools import combinations

from glab.exact.field import QQ
from glab.exact.matrix import Matrix
from glab.poly.jet import Jet, jet_det, normalize_block, value_of

logger = logging.getLogger(__name__)


class ChartCoordinates:
    '''Labels and indices of the chart coordinates a, b and (optionally) x.'''

    def __init__(self, n, with_center=True):
        self.n = n
        self.labels = []
        self.index = {}
        top = 2 * n + 2
        for i in range(2):
            for j in range(2, top):
                self._add('a', i, j)
        for i in range(2):
            for j in [0, 1] + list(range(4, top)):
                self._add('b', i, j)
        if with_center:
            for k in range(n):
                for j in [0, 1] + list(range(n + 2, top)):
                    self._add('x', k, j)

    def _add(self, name, i, j):
        self.index[(name, i, j)] = len(self.labels)
        self.labels.append('%s_%d_%d' % (name, i, j))

    @property
    def size(self):
        return len(self.labels)

    def jet(self, name, i, j, base=None, field=QQ):
        base = field.zero if base is None else field(base)
        return Jet.variable(base, self.index[(name, i, j)], field.one, self.size)

    def sparse(self, v):
        return {self.labels[c]: str(x) for c, x in enumerate(v) if x != 0}


def _line_rows(coords, field):
    '''Chart rows of l1 (frame 0, 1) and of l2 (frame 2, 3), as jets.'''
    n = coords.n
    ncols = 2 * n + 2
    zero, one = field.zero, field.one
    l1 = []
    for i in range(2):
        row = [zero] * ncols
        row[i] = one
        for j in range(2, ncols):
            row[j] = coords.jet('a', i, j, field=field)
        l1.append(row)
    l2 = []
    for i in range(2):
        row = [zero] * ncols
        row[2 + i] = one
        for j in [0, 1] + list(range(4, ncols)):
            row[j] = coords.jet('b', i, j, field=field)
        l2.append(row)
    return l1, l2


def _center_rows(coords, field):
    n = coords.n
    ncols = 2 * n + 2
    zero, one = field.zero, field.one
    rows = []
    for k in range(n):
        row = [zero] * ncols
        row[2 + k] = one
        row[0] = coords.jet('x', k, 0, base=1 if k == 1 else 0, field=field)
        row[1] = coords.jet('x', k, 1, field=field)
        for j in range(n + 2, ncols):
            row[j] = coords.jet('x', k, j, field=field)
        rows.append(row)
    return rows


def incidence_matrices(n, field=QQ):
    coords = ChartCoordinates(n)
    l1, l2 = _line_rows(coords, field)
    lam = _center_rows(coords, field)
    return coords, [l1 + [l2[i]] + lam for i in range(2)]


def expected_equations(coords, field=QQ, mutate=False):
    '''
    Rows of x_0j - b_0j and x_1j - a_0j - b_1j. With mutate, the first
    equation becomes x_0j - 2 b_0j.
    '''
    n = coords.n
    zero, one = field.zero, field.one
    rows = []
    for j in range(n + 2, 2 * n + 2):
        r = [zero] * coords.size
        r[coords.index[('x', 0, j)]] = one
        r[coords.index[('b', 0, j)]] = -field(2) if mutate and j == n + 2 else -one
        rows.append(r)
        r = [zero] * coords.size
        r[coords.index[('x', 1, j)]] = one
        r[coords.index[('a', 0, j)]] = -one
        r[coords.index[('b', 1, j)]] = -one
        rows.append(r)
    return Matrix._trusted(rows, field, coords.size)


class IncidenceTangentReport:

    def __init__(self, n, coords, linear_parts, expected, base_ok):
        self.n = n
        self.coords = coords
        self.linear_parts = linear_parts
        self.expected = expected
        self.base_on_variety = base_ok
        self.rank = linear_parts.rank()
        self.match = linear_parts.rref().nonzero_rows() == expected.rref().nonzero_rows()

    @property
    def ambient_dim(self):
        return self.coords.size

    @property
    def grassmann_dim(self):
        return self.n * self.n + 2 * self.n

    @property
    def codim(self):
        return self.rank

    def tangent_basis(self):
        return self.linear_parts.kernel_basis()

    def to_dict(self, with_basis=False):
        doc = {
            'n': self.n,
            'ambient_tangent_dim': self.ambient_dim,
            'grassmann_dim': self.grassmann_dim,
            'minors': self.linear_parts.nrows,
            'base_on_variety': self.base_on_variety,
            'codim': self.codim,
            'expected_codim': 2 * self.n,
            'tangent_dim': self.ambient_dim - self.rank,
            'expected': [self.coords.sparse(r) for r in self.expected.rows()],
            'match': self.match,
        }
        if with_basis:
            doc['labels'] = list(self.coords.labels)
            doc['tangent_basis'] = [self.coords.sparse(r) for r in self.tangent_basis().rows()]
        return doc


def ix_tangent_check(n, field=QQ, mutate=False):
    '''Linear parts of every maximal minor of both incidence matrices, compared with the expected equations.'''
    if n < 2:
        raise ValueError('the incidence tangent check needs n >= 2, got %d' % n)
    coords, mats = incidence_matrices(n, field)
    zero = field.zero
    rows = []
    base_ok = True
    size = n + 3
    for m in mats:
        for cols in combinations(range(2 * n + 2), size):
            d = jet_det([[r[c] for c in cols] for r in m], field)
            if d.value != 0:
                base_ok = False
            rows.append(d.gradient(zero))
    logger.debug('ix_tangent_check n=%d: %d minors over %d coordinates', n, len(rows), coords.size)
    linear = Matrix._trusted(rows, field, coords.size)
    return IncidenceTangentReport(n, coords, linear, expected_equations(coords, field, mutate), base_ok)


def secant_chart_differential_check(n, field=QQ):
    '''
    The span map (l1, l2) -> <l1, l2> near (<e0, e1>, <e2, e3>): in the chart
    of G(3, 2n+1) around <e0..e3>, its differential must be the coordinate
    projection (a, b) -> (a_0j, a_1j, b_0j, b_1j) for j >= 4.
    '''
    if n < 1:
        raise ValueError('n must be >= 1, got %d' % n)
    coords = ChartCoordinates(n, with_center=False)
    l1, l2 = _line_rows(coords, field)
    m = normalize_block(l1 + l2, [0, 1, 2, 3])
    zero, one = field.zero, field.one
    source = [('a', 0), ('a', 1), ('b', 0), ('b', 1)]
    grads = []
    mismatches = 0
    base_ok = True
    for i, (name, row) in enumerate(source):
        for j in range(4, 2 * n + 2):
            x = m[i][j]
            g = x.gradient(zero) if isinstance(x, Jet) else [zero] * coords.size
            if value_of(x) != 0:
                base_ok = False
            want = [zero] * coords.size
            want[coords.index[(name, row, j)]] = one
            if g != want:
                mismatches += 1
            grads.append(g)
    rank = Matrix._trusted(grads, field, coords.size).rank() if grads else 0
    return {
        'n': n,
        'coordinates': coords.size,
        'rank': rank,
        'expected_rank': 8 * n - 8,
        'base_ok': base_ok,
        'mismatches': mismatches,
        'pass': base_ok and mismatches == 0 and rank == 8 * n - 8,
    }
