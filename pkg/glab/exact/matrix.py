#!/usr/bin/python3

'''
Dense exact matrices over a single field.

Matrices are immutable: every operation returns a new Matrix. The reduced
row-echelon form is computed once and cached; it is the canonical
representative used for subspace equality everywhere else in the package.
'''

from fractions import Fraction

from glab.errors import DimensionMismatchError, FieldMismatchError
from glab.exact.field import QQ, ModP


def coerce_entry(field, x):
    '''field(x), refusing elements that carry another field's tag.'''
    if isinstance(x, ModP) and not field.owns(x):
        raise FieldMismatchError()
    ## a non-integral rational is a Q element; reduce it with field(x) explicitly ##
    if isinstance(x, Fraction) and x.denominator != 1 and field.size is not None:
        raise FieldMismatchError('rational %s is not an element of %r' % (x, field))
    return field(x)


def gauss_jordan(rows, ncols, one):
    '''
    In-place Gauss-Jordan elimination on a list of lists of field
    elements. Returns the pivot columns. Zero rows end up at the bottom.
    '''
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        inv = one / rows[r][c]
        pivot_row = [x * inv for x in rows[r]]
        rows[r] = pivot_row
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f != 0:
                row = rows[i]
                rows[i] = [row[j] - f * pivot_row[j] for j in range(ncols)]
        pivots.append(c)
        r += 1
    return pivots


def elimination_det(rows, one):
    '''Determinant of a square list-of-lists by fraction-based elimination.'''
    m = [list(r) for r in rows]
    n = len(m)
    det = one
    for c in range(n):
        piv = None
        for i in range(c, n):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            return one - one
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        p = m[c][c]
        det = det * p
        inv = one / p
        for i in range(c + 1, n):
            f = m[i][c]
            if f != 0:
                f = f * inv
                row = m[i]
                m[i] = [row[j] - f * m[c][j] for j in range(n)]
    return det


class Matrix:

    def __init__(self, entries, field=QQ, ncols=None):
        entries = [list(r) for r in entries]
        if ncols is None:
            if len(entries) == 0:
                raise DimensionMismatchError('empty matrix needs an explicit column count')
            ncols = len(entries[0])
        for r in entries:
            if len(r) != ncols:
                raise DimensionMismatchError('ragged matrix: expected %d columns' % ncols)
        self.field = field
        self.nrows = len(entries)
        self.ncols = ncols
        self.entries = tuple(tuple(coerce_entry(field, x) for x in r) for r in entries)
        self._rref = None
        self._pivots = None

    @classmethod
    def _trusted(cls, entries, field, ncols):
        ## entries already coerced ##
        m = cls.__new__(cls)
        m.field = field
        m.entries = tuple(tuple(r) for r in entries)
        m.nrows = len(m.entries)
        m.ncols = ncols
        m._rref = None
        m._pivots = None
        return m

    @classmethod
    def zeros(cls, nrows, ncols, field=QQ):
        z = field.zero
        return cls._trusted([[z] * ncols for _ in range(nrows)], field, ncols)

    @classmethod
    def identity(cls, n, field=QQ):
        z, o = field.zero, field.one
        return cls._trusted([[o if i == j else z for j in range(n)] for i in range(n)], field, n)

    @classmethod
    def empty(cls, ncols, field=QQ):
        return cls._trusted([], field, ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def rows(self):
        return list(self.entries)

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def _check_field(self, other):
        if other.field != self.field:
            raise FieldMismatchError()

    def transpose(self):
        if self.nrows == 0:
            return Matrix.zeros(self.ncols, 0, self.field)
        return Matrix._trusted([list(c) for c in zip(*self.entries)], self.field, self.nrows)

    def __matmul__(self, other):
        self._check_field(other)
        if self.ncols != other.nrows:
            raise DimensionMismatchError('cannot multiply %dx%d by %dx%d' % (
                self.nrows, self.ncols, other.nrows, other.ncols))
        z = self.field.zero
        cols = [other.column(j) for j in range(other.ncols)]
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = z
                for a, b in zip(r, c):
                    if a != 0 and b != 0:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return Matrix._trusted(out, self.field, other.ncols)

    def __add__(self, other):
        self._check_field(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatchError('shape mismatch')
        return Matrix._trusted([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                               self.field, self.ncols)

    def scale(self, c):
        c = self.field(c)
        return Matrix._trusted([[c * a for a in r] for r in self.entries], self.field, self.ncols)

    def stack(self, *others):
        rows = list(self.entries)
        for o in others:
            self._check_field(o)
            if o.ncols != self.ncols:
                raise DimensionMismatchError('cannot stack %d and %d columns' % (self.ncols, o.ncols))
            rows.extend(o.entries)
        return Matrix._trusted(rows, self.field, self.ncols)

    def _echelon(self):
        if self._rref is None:
            rows = [list(r) for r in self.entries]
            pivots = gauss_jordan(rows, self.ncols, self.field.one)
            self._rref = Matrix._trusted(rows, self.field, self.ncols)
            self._rref._rref = self._rref
            self._rref._pivots = tuple(pivots)
            self._pivots = tuple(pivots)
        return self._rref, self._pivots

    def rref(self):
        return self._echelon()[0]

    def pivots(self):
        return self._echelon()[1]

    def rank(self):
        return len(self._echelon()[1])

    def kernel_basis(self):
        '''Rows spanning the right kernel, in canonical reduced echelon form.'''
        r, pivots = self._echelon()
        free = [c for c in range(self.ncols) if c not in pivots]
        z, o = self.field.zero, self.field.one
        basis = []
        for f in free:
            v = [z] * self.ncols
            v[f] = o
            for i, p in enumerate(pivots):
                v[p] = -r.entries[i][f]
            basis.append(v)
        if not basis:
            return Matrix.empty(self.ncols, self.field)
        return Matrix._trusted(basis, self.field, self.ncols).rref()

    def nonzero_rows(self):
        return Matrix._trusted([r for r in self.entries if any(x != 0 for x in r)], self.field, self.ncols)

    def det(self):
        if self.nrows != self.ncols:
            raise DimensionMismatchError('determinant of a non-square matrix')
        if self.nrows == 0:
            return self.field.one
        return elimination_det(self.entries, self.field.one)

    def is_zero(self):
        return all(x == 0 for r in self.entries for x in r)

    def reduce_vector(self, v):
        '''Remainder of v modulo the row space (uses the cached rref).'''
        r, pivots = self._echelon()
        v = list(v)
        for i, p in enumerate(pivots):
            c = v[p]
            if c != 0:
                row = r.entries[i]
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def to_strings(self):
        return [[str(x) for x in r] for r in self.entries]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.ncols == other.ncols and self.entries == other.entries

    def __hash__(self):
        return hash((self.ncols, self.entries))

    def __repr__(self):
        return 'Matrix(%s, %r)' % (self.to_strings(), self.field)


def rank(m):
    return m.rank()


def kernel_basis(m):
    return m.kernel_basis()


def rref(m):
    return m.rref()
