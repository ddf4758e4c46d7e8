#!/usr/bin/python3

'''
Linear subspaces of P^N.

A subspace is stored by its canonical basis: the nonzero rows of the reduced
row-echelon form of any spanning matrix. Two subspaces are equal exactly when
their canonical bases agree entry by entry. Projective dimension is the row
count minus one, so the empty subspace has dimension -1.
'''

from itertools import combinations, product

from glab.errors import DegenerateEvaluationError, DimensionMismatchError, FieldMismatchError
from glab.exact.field import QQ
from glab.exact.matrix import Matrix


class ProjSubspace:

    def __init__(self, rows, field=QQ, ncols=None):
        m = rows if isinstance(rows, Matrix) else Matrix(rows, field, ncols)
        canon = m.rref().nonzero_rows()
        self.basis = canon
        self.field = m.field
        self.N = m.ncols - 1
        self._equations = None

    @classmethod
    def _canonical(cls, basis):
        ## basis is already reduced and of full row rank ##
        s = cls.__new__(cls)
        s.basis = basis
        s.field = basis.field
        s.N = basis.ncols - 1
        s._equations = None
        return s

    @property
    def dim(self):
        return self.basis.nrows - 1

    @property
    def codim(self):
        return self.N - self.dim

    def is_empty(self):
        return self.basis.nrows == 0

    def rows(self):
        return self.basis.rows()

    def equations(self):
        '''Linear forms (rows) cutting out the subspace, cached.'''
        if self._equations is None:
            self._equations = self.basis.kernel_basis()
        return self._equations

    def contains_point(self, v):
        if len(v) != self.N + 1:
            raise DimensionMismatchError('point has %d coordinates, expected %d' % (len(v), self.N + 1))
        return all(x == 0 for x in self.basis.reduce_vector([self.field(x) for x in v]))

    def __eq__(self, other):
        if not isinstance(other, ProjSubspace):
            return NotImplemented
        return self.N == other.N and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return '%s(dim=%d, N=%d, %s)' % (type(self).__name__, self.dim, self.N, self.basis.to_strings())


class Line(ProjSubspace):

    def __init__(self, rows, field=QQ, ncols=None):
        super().__init__(rows, field, ncols)
        if self.basis.nrows != 2:
            raise DegenerateEvaluationError('a line needs two independent rows, got rank %d' % self.basis.nrows)


def _wrap(basis):
    if basis.nrows == 2:
        return Line._canonical(basis)
    return ProjSubspace._canonical(basis)


def subspace_from_rows(m):
    '''Canonical subspace spanned by the rows of m; a Line when the rank is 2.'''
    if not isinstance(m, Matrix):
        m = Matrix(m)
    return _wrap(m.rref().nonzero_rows())


def point(v, field=QQ):
    return subspace_from_rows(Matrix([v], field))


def coordinate_subspace(indices, N, field=QQ):
    z, o = field.zero, field.one
    rows = [[o if j == i else z for j in range(N + 1)] for i in sorted(indices)]
    if not rows:
        return ProjSubspace._canonical(Matrix.empty(N + 1, field))
    return subspace_from_rows(Matrix(rows, field))


def whole_space(N, field=QQ):
    return coordinate_subspace(range(N + 1), N, field)


def _check(a, b):
    if a.field != b.field:
        raise FieldMismatchError()
    if a.N != b.N:
        raise DimensionMismatchError('ambient mismatch: P^%d and P^%d' % (a.N, b.N))


def span(a, b):
    _check(a, b)
    return subspace_from_rows(a.basis.stack(b.basis))


def span_all(subspaces):
    subspaces = list(subspaces)
    for s in subspaces[1:]:
        _check(subspaces[0], s)
    first = subspaces[0].basis
    return subspace_from_rows(first.stack(*[s.basis for s in subspaces[1:]]))


def meet(a, b):
    _check(a, b)
    forms = a.equations().stack(b.equations())
    k = forms.kernel_basis()
    return _wrap(k.nonzero_rows())


def contains(a, b):
    '''True iff b is a subspace of a.'''
    _check(a, b)
    for r in b.basis.rows():
        if any(x != 0 for x in a.basis.reduce_vector(r)):
            return False
    return True


def line_meets(line, p):
    _check(line, p)
    return line.basis.stack(p.basis).rank() < line.basis.nrows + p.basis.nrows


def random_subspace(N, k, field, rng, bound=None):
    '''A random k-dimensional subspace of P^N (full-rank sample, resampled if needed).'''
    for _ in range(100):
        m = Matrix([[field.random(rng, bound) for _ in range(N + 1)] for _ in range(k + 1)], field)
        if m.rank() == k + 1:
            return subspace_from_rows(m)
    raise DegenerateEvaluationError('could not sample a %d-plane in P^%d' % (k, N))


def enumerate_subspaces(N, k, field):
    '''
    Every k-dimensional subspace of P^N over a finite field, one canonical
    basis each: choose pivot columns, then fill the free entries.
    '''
    elements = field.elements()
    z, o = field.zero, field.one
    for pivots in combinations(range(N + 1), k + 1):
        free = []
        for i, p in enumerate(pivots):
            for c in range(p + 1, N + 1):
                if c not in pivots:
                    free.append((i, c))
        for values in product(elements, repeat=len(free)):
            rows = [[z] * (N + 1) for _ in range(k + 1)]
            for i, p in enumerate(pivots):
                rows[i][p] = o
            for (i, c), v in zip(free, values):
                rows[i][c] = v
            yield _wrap(Matrix._trusted(rows, field, N + 1))
