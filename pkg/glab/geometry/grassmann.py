#!/usr/bin/python3

'''
Lines through their Plücker coordinates, Schubert divisors H_Π of lines
meeting a codimension-2 subspace Π, and affine charts of Grassmannians.

Plücker coordinates are ordered lexicographically by pair (p01, p02, ...,
p0N, p12, ...) and scaled so the first nonzero coordinate is 1.

A chart is given by a frame: the tuple of pivot columns. A subspace in the
chart is the row space of a matrix carrying the identity on the frame
columns; its chart coordinates are the remaining entries, row by row.
'''

import logging
from itertools import combinations

from glab.errors import (DegenerateEvaluationError, DimensionMismatchError, NotDecomposableError,
                         OffDivisorError, OutsideChartError)
from glab.exact.field import QQ
from glab.exact.matrix import Matrix
from glab.geometry.proj_space import Line, contains, subspace_from_rows
from glab.poly.jet import Jet, normalize_block

logger = logging.getLogger(__name__)


def plucker_pairs(N):
    return list(combinations(range(N + 1), 2))


def raw_minors(r0, r1):
    '''All 2x2 minors of a pair of rows, in pair order; works for jets and polynomials too.'''
    n = len(r0)
    return [r0[i] * r1[j] - r0[j] * r1[i] for i, j in combinations(range(n), 2)]


class PluckerVector:

    def __init__(self, coords, N, field=QQ, normalize=True):
        pairs = plucker_pairs(N)
        if len(coords) != len(pairs):
            raise DimensionMismatchError('P^%d needs %d Plücker coordinates, got %d' % (N, len(pairs), len(coords)))
        coords = [field(c) for c in coords]
        lead = next((c for c in coords if c != 0), None)
        if lead is None:
            raise DegenerateEvaluationError('all Plücker coordinates vanish')
        if normalize and lead != 1:
            inv = field.one / lead
            coords = [c * inv for c in coords]
        self.N = N
        self.field = field
        self.coords = tuple(coords)
        self._index = {p: k for k, p in enumerate(pairs)}

    def __getitem__(self, ij):
        i, j = ij
        if i == j:
            return self.field.zero
        if i > j:
            return -self.coords[self._index[(j, i)]]
        return self.coords[self._index[(i, j)]]

    def as_dict(self):
        return dict(zip(plucker_pairs(self.N), self.coords))

    def __eq__(self, other):
        if not isinstance(other, PluckerVector):
            return NotImplemented
        return self.N == other.N and self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash((self.N, self.coords))

    def __repr__(self):
        return 'PluckerVector(%s)' % [str(c) for c in self.coords]


def plucker(line):
    r0, r1 = line.basis.rows()
    return PluckerVector(raw_minors(r0, r1), line.N, line.field)


def _relation_values(v):
    N = v.N
    for i, j, k, l in combinations(range(N + 1), 4):
        yield v[i, j] * v[k, l] - v[i, k] * v[j, l] + v[i, l] * v[j, k]


def plucker_relations_ok(v):
    return all(x == 0 for x in _relation_values(v))


def line_from_plucker(v):
    if not plucker_relations_ok(v):
        raise NotDecomposableError()
    N = v.N
    a, b = next(p for p, c in v.as_dict().items() if c != 0)
    w0 = [v[a, c] for c in range(N + 1)]
    w1 = [v[b, c] for c in range(N + 1)]
    line = Line(Matrix([w0, w1], v.field))
    if plucker(line) != PluckerVector(v.coords, N, v.field):
        raise NotDecomposableError()
    return line


class SchubertForm:
    '''
    λ(P1, P2) = f(P1) g(P2) - f(P2) g(P1) for forms f, g cutting out Π,
    stored as the linear functional c_ij = f_i g_j - f_j g_i on Plücker space.
    '''

    def __init__(self, subspace, f, g):
        self.subspace = subspace
        self.field = subspace.field
        self.N = subspace.N
        self.f = tuple(f)
        self.g = tuple(g)
        self.coeffs = {(i, j): f[i] * g[j] - f[j] * g[i] for i, j in plucker_pairs(self.N)}

    def evaluate(self, v):
        return sum((c * v[ij] for ij, c in self.coeffs.items() if c != 0), self.field.zero)

    def bilinear(self, r0, r1):
        '''λ on a raw pair of rows; entries may be field elements, jets or polynomials.'''
        f0 = _dot(self.f, r0)
        g0 = _dot(self.g, r0)
        f1 = _dot(self.f, r1)
        g1 = _dot(self.g, r1)
        return f0 * g1 - f1 * g0

    def at_line(self, line):
        r0, r1 = line.basis.rows()
        return self.bilinear(r0, r1)

    def nonzero_coeffs(self):
        return {ij: c for ij, c in self.coeffs.items() if c != 0}

    def __repr__(self):
        return 'SchubertForm(%s)' % ' + '.join('%s*p%d%d' % (c, i, j) for (i, j), c in self.nonzero_coeffs().items())


def _dot(f, r):
    acc = None
    for a, x in zip(f, r):
        if a == 0:
            continue
        t = x * a
        acc = t if acc is None else acc + t
    if acc is None:
        return r[0] * 0
    return acc


def schubert_form(p):
    if p.dim != p.N - 2:
        raise DimensionMismatchError('Schubert form needs a codimension-2 subspace, got dim %d in P^%d' % (p.dim, p.N))
    f, g = p.equations().rows()
    return SchubertForm(p, f, g)


def schubert_gradient(form, line, frame=None):
    '''Gradient of λ in the chart of `frame` around the line (default: its pivot frame).'''
    if frame is None:
        frame = line.basis.pivots()
    rows = chart_rows(line, frame)
    N = line.N
    free = [c for c in range(N + 1) if c not in frame]
    size = 2 * len(free)
    one = form.field.one
    jets = []
    for i, r in enumerate(rows):
        jr = [Jet.constant(x, size) for x in r]
        for k, c in enumerate(free):
            jr[c] = jr[c] + Jet.variable(form.field.zero, i * len(free) + k, one, size)
        jets.append(jr)
    val = form.bilinear(jets[0], jets[1])
    if not isinstance(val, Jet):
        return [form.field.zero] * size
    return val.gradient(form.field.zero)


def schubert_singular(p, line, frame=None):
    form = p if isinstance(p, SchubertForm) else schubert_form(p)
    if form.at_line(line) != 0:
        raise OffDivisorError()
    grad = schubert_gradient(form, line, frame)
    singular = all(x == 0 for x in grad)
    logger.debug('schubert_singular: %s, contained=%s', singular, contains(form.subspace, line))
    return singular


class ChartPoint:

    def __init__(self, frame, coords, N, field=QQ):
        self.frame = tuple(frame)
        self.N = N
        self.field = field
        free = N + 1 - len(self.frame)
        coords = [tuple(field(x) for x in r) for r in coords]
        if len(coords) != len(self.frame) or any(len(r) != free for r in coords):
            raise DimensionMismatchError('chart coordinates must be %dx%d' % (len(self.frame), free))
        self.coords = tuple(coords)

    @property
    def free_columns(self):
        return [c for c in range(self.N + 1) if c not in self.frame]

    def __getitem__(self, ij):
        '''Coordinate a_ij by row and ambient column j (not in the frame).'''
        i, j = ij
        return self.coords[i][self.free_columns.index(j)]

    def __eq__(self, other):
        if not isinstance(other, ChartPoint):
            return NotImplemented
        return (self.frame, self.N, self.coords) == (other.frame, other.N, other.coords)

    def __hash__(self):
        return hash((self.frame, self.coords))

    def __repr__(self):
        return 'ChartPoint(frame=%s, %s)' % (self.frame, [[str(x) for x in r] for r in self.coords])


def chart_rows(subspace, frame):
    try:
        return normalize_block(subspace.basis.rows(), list(frame))
    except (ZeroDivisionError, DimensionMismatchError):
        raise OutsideChartError()


def chart_coords(subspace, frame):
    frame = tuple(frame)
    rows = chart_rows(subspace, frame)
    free = [c for c in range(subspace.N + 1) if c not in frame]
    return ChartPoint(frame, [[r[c] for c in free] for r in rows], subspace.N, subspace.field)


def chart_matrix(frame, coords, N, zero, one):
    '''Raw chart matrix: identity on the frame, coords elsewhere (jets allowed).'''
    free = [c for c in range(N + 1) if c not in frame]
    rows = []
    for i, r in enumerate(coords):
        row = [zero] * (N + 1)
        for k, c in enumerate(frame):
            row[c] = one if k == i else zero
        for c, x in zip(free, r):
            row[c] = x
        rows.append(row)
    return rows


def chart_line(cp):
    rows = chart_matrix(cp.frame, cp.coords, cp.N, cp.field.zero, cp.field.one)
    return subspace_from_rows(Matrix(rows, cp.field))


def jet_chart_coords(rows, frame):
    '''Chart coordinates of a jet-valued spanning matrix.'''
    try:
        m = normalize_block(rows, list(frame))
    except ZeroDivisionError:
        raise OutsideChartError()
    n = len(m[0])
    free = [c for c in range(n) if c not in frame]
    return [[r[c] for c in free] for r in m]
