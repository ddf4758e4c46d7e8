#!/usr/bin/python3

'''
First-order jets: a value plus a linear infinitesimal part, with eps^2 = 0.

The infinitesimal part is stored sparsely as {direction: coefficient}; `size`
is the number of active directions, so the dense gradient has that length.
Jets mix freely with plain field elements (Fraction or ModP) on either side
of an operator.
'''

from glab.errors import DimensionMismatchError
from glab.exact.matrix import Matrix, elimination_det
from glab.settings import hparams


class Jet:
    __slots__ = ('value', 'inf', 'size')

    def __init__(self, value, inf=None, size=0):
        self.value = value
        self.inf = {} if inf is None else {k: v for k, v in inf.items() if v != 0}
        self.size = size

    @classmethod
    def _make(cls, value, inf, size):
        j = cls.__new__(cls)
        j.value = value
        j.inf = inf
        j.size = size
        return j

    @classmethod
    def constant(cls, value, size=0):
        return cls._make(value, {}, size)

    @classmethod
    def variable(cls, value, direction, one, size):
        return cls._make(value, {direction: one}, size)

    def is_zero(self):
        return self.value == 0 and not self.inf

    def gradient(self, zero):
        g = [zero] * self.size
        for k, v in self.inf.items():
            g[k] = v
        return g

    def _size(self, other):
        return max(self.size, other.size)

    def __add__(self, other):
        if isinstance(other, Jet):
            inf = dict(self.inf)
            for k, v in other.inf.items():
                s = inf.get(k)
                if s is None:
                    inf[k] = v
                else:
                    s = s + v
                    if s != 0:
                        inf[k] = s
                    else:
                        del inf[k]
            return Jet._make(self.value + other.value, inf, self._size(other))
        return Jet._make(self.value + other, self.inf, self.size)

    __radd__ = __add__

    def __neg__(self):
        return Jet._make(-self.value, {k: -v for k, v in self.inf.items()}, self.size)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def _scaled(self, c):
        if c == 0:
            return {}
        return {k: c * v for k, v in self.inf.items()}

    def __mul__(self, other):
        if isinstance(other, Jet):
            inf = self._scaled(other.value)
            for k, v in other.inf.items():
                if self.value == 0:
                    break
                t = self.value * v
                s = inf.get(k)
                if s is None:
                    inf[k] = t
                else:
                    s = s + t
                    if s != 0:
                        inf[k] = s
                    else:
                        del inf[k]
            return Jet._make(self.value * other.value, inf, self._size(other))
        return Jet._make(self.value * other, self._scaled(other), self.size)

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise ZeroDivisionError('jet with zero value is not invertible')
        inv = 1 / self.value
        c = -(inv * inv)
        return Jet._make(inv, self._scaled(c), self.size)

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.inverse()
        return self * (1 / other)

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e == 0:
            return Jet._make(self.value ** 0, {}, self.size)
        if e < 0:
            return self.inverse() ** (-e)
        base = self.value ** (e - 1)
        return Jet._make(base * self.value, self._scaled(e * base), self.size)

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self.value == other.value and self.inf == other.inf
        return self.value == other and not self.inf

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.value, tuple(sorted(self.inf.items()))))

    def __repr__(self):
        terms = ' + '.join('%s*e%d' % (v, k) for k, v in sorted(self.inf.items()))
        return 'Jet(%s%s)' % (self.value, (' + ' + terms) if terms else '')


def value_of(x):
    return x.value if isinstance(x, Jet) else x


def is_zero(x):
    if isinstance(x, Jet):
        return x.is_zero()
    return x == 0


def jet_point(point, field, offset=0, size=None):
    '''Jets t_i + eps_{offset+i} for every coordinate of point.'''
    if size is None:
        size = offset + len(point)
    one = field.one
    return [Jet.variable(field(p), offset + i, one, size) for i, p in enumerate(point)]


def jet_direction(point, direction, field):
    '''Single-direction jets t + eps*v.'''
    if len(point) != len(direction):
        raise DimensionMismatchError('point and direction lengths differ')
    return [Jet._make(field(p), {0: field(v)} if field(v) != 0 else {}, 1) for p, v in zip(point, direction)]


def jacobian_at(polys, point):
    '''
    Exact Jacobian of a vector of MultiPoly at a point: one jet evaluation
    carrying every coordinate direction at once.
    '''
    polys = list(polys)
    if not polys:
        raise DimensionMismatchError('empty polynomial vector')
    field = polys[0].field
    nvars = polys[0].nvars
    for p in polys:
        if p.nvars != nvars:
            raise DimensionMismatchError('polynomials disagree on the variable count')
    if len(point) != nvars:
        raise DimensionMismatchError('point has length %d, expected %d' % (len(point), nvars))
    jets = jet_point(point, field)
    zero = field.zero
    rows = []
    for p in polys:
        j = p.evaluate(jets)
        if isinstance(j, Jet):
            rows.append(j.gradient(zero) + [zero] * (nvars - j.size))
        else:
            rows.append([zero] * nvars)
    return Matrix._trusted(rows, field, nvars)


def _cofactor_det(rows, field):
    n = len(rows)
    zero = field.zero
    memo = {}

    def expand(r, cols):
        if r == n:
            return field.one
        key = (r, cols)
        if key in memo:
            return memo[key]
        total = zero
        for idx, c in enumerate(cols):
            a = rows[r][c]
            if is_zero(a):
                continue
            minor = expand(r + 1, cols[:idx] + cols[idx + 1:])
            if is_zero(minor):
                continue
            term = a * minor
            total = total + term if idx % 2 == 0 else total - term
        memo[key] = total
        return total

    return expand(0, tuple(range(n)))


def _elimination_jet_det(rows, field, size):
    n = len(rows)
    zero, one = field.zero, field.one
    values = [[value_of(x) for x in r] for r in rows]
    det = elimination_det(values, one)
    inf = {}
    for i in range(n):
        for j in range(n):
            x = rows[i][j]
            if not isinstance(x, Jet) or not x.inf:
                continue
            minor = [values[a][:j] + values[a][j + 1:] for a in range(n) if a != i]
            cof = elimination_det(minor, one) if minor else one
            if cof == 0:
                continue
            if (i + j) % 2:
                cof = -cof
            for k, v in x.inf.items():
                inf[k] = inf.get(k, zero) + cof * v
    return Jet(det, inf, size)


def jet_det(rows, field):
    '''
    Determinant of a square matrix of jets (plain field entries allowed).
    Cofactor expansion up to hparams['cofactor_limit'], elimination above.
    '''
    n = len(rows)
    for r in rows:
        if len(r) != n:
            raise DimensionMismatchError('jet determinant of a non-square matrix')
    size = max([x.size for r in rows for x in r if isinstance(x, Jet)] + [0])
    if n == 0:
        return Jet.constant(field.one, size)
    if n <= hparams['cofactor_limit']:
        d = _cofactor_det(rows, field)
    else:
        d = _elimination_jet_det(rows, field, size)
    if not isinstance(d, Jet):
        d = Jet.constant(d, size)
    d.size = size
    return d


def jet_det_by_elimination(rows, field):
    size = max([x.size for r in rows for x in r if isinstance(x, Jet)] + [0])
    return _elimination_jet_det(rows, field, size)


def jet_det_by_cofactors(rows, field):
    size = max([x.size for r in rows for x in r if isinstance(x, Jet)] + [0])
    d = _cofactor_det(rows, field)
    if not isinstance(d, Jet):
        d = Jet.constant(d, size)
    d.size = size
    return d


def normalize_block(rows, cols):
    '''
    Left-multiply a matrix (rows of jets or field elements) by the inverse
    of its square block on `cols`, so that block becomes the identity.
    Raises ZeroDivisionError when the block is singular at the base value.
    '''
    m = [list(r) for r in rows]
    k = len(cols)
    if k != len(m):
        raise DimensionMismatchError('block must be square')
    for a, c in enumerate(cols):
        piv = None
        for i in range(a, k):
            if value_of(m[i][c]) != 0:
                piv = i
                break
        if piv is None:
            raise ZeroDivisionError('pivot block is singular')
        if piv != a:
            m[a], m[piv] = m[piv], m[a]
        inv = 1 / m[a][c]
        m[a] = [x * inv for x in m[a]]
        for i in range(k):
            if i == a:
                continue
            f = m[i][c]
            if not is_zero(f):
                m[i] = [x - f * y for x, y in zip(m[i], m[a])]
    return m
