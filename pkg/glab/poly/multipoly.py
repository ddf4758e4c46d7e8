#!/usr/bin/python3

'''
Sparse multivariate polynomials over an exact field, and matrices of them.

A MultiPoly is a dict from exponent tuples to nonzero coefficients. The
variables are anonymous and indexed 0..nvars-1; text I/O names them t0, t1,
... unless a list of names is given. Text grammar: terms joined by + or -,
each term a '*'-product of an optional coefficient (integer or p/q) and
powers name^k, e.g. "3/2*t0^2*t1 - t2 + 5".

Evaluation accepts any values that support + and * with the coefficients,
so the same polynomial is evaluated at field points and at Jet points.
'''

import re
from fractions import Fraction
from itertools import combinations

from glab.errors import DimensionMismatchError, FieldMismatchError, NotHomogeneousError, PolyParseError
from glab.exact.field import QQ, ModP
from glab.exact.matrix import Matrix, coerce_entry


def monomials_of_degree(nvars, d):
    '''Exponent vectors of total degree d, in graded lexicographic order.'''
    if nvars == 0:
        return [()] if d == 0 else []
    if nvars == 1:
        return [(d,)]
    out = []
    for e in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return out


def _grlex_key(e):
    return (sum(e), e)


class MultiPoly:

    def __init__(self, terms, nvars, field=QQ):
        self.nvars = nvars
        self.field = field
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != nvars:
                raise DimensionMismatchError('exponent %r has length %d, expected %d' % (e, len(e), nvars))
            if any(x < 0 for x in e):
                raise DimensionMismatchError('negative exponent in %r' % (e,))
            c = coerce_entry(field, c)
            if c == 0:
                continue
            if e in clean:
                c = clean[e] + c
                if c == 0:
                    del clean[e]
                    continue
            clean[e] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, terms, nvars, field):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.field = field
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars, field=QQ):
        return cls._trusted({}, nvars, field)

    @classmethod
    def constant(cls, c, nvars, field=QQ):
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def variable(cls, i, nvars, field=QQ):
        if not 0 <= i < nvars:
            raise DimensionMismatchError('variable %d out of range for %d variables' % (i, nvars))
        e = [0] * nvars
        e[i] = 1
        return cls._trusted({tuple(e): field.one}, nvars, field)

    @classmethod
    def variables(cls, nvars, field=QQ):
        return [cls.variable(i, nvars, field) for i in range(nvars)]

    @classmethod
    def linear_form(cls, coeffs, field=QQ):
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, n, field)

    ## arithmetic ##

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.field != self.field:
                raise FieldMismatchError()
            if other.nvars != self.nvars:
                raise DimensionMismatchError('polynomials in %d and %d variables' % (self.nvars, other.nvars))
            return other
        if isinstance(other, ModP) and not self.field.owns(other):
            raise FieldMismatchError()
        if isinstance(other, (int, Fraction, ModP)):
            return MultiPoly.constant(other, self.nvars, self.field)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s != 0:
                    terms[e] = s
                else:
                    del terms[e]
        return MultiPoly._trusted(terms, self.nvars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._trusted({e: -c for e, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(e)
                terms[e] = c if s is None else s + c
        terms = {e: c for e, c in terms.items() if c != 0}
        return MultiPoly._trusted(terms, self.nvars, self.field)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError('negative power of a polynomial')
        result = MultiPoly.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def over(self, field):
        '''The same polynomial with coefficients coerced into another field.'''
        if field == self.field:
            return self
        return MultiPoly({e: field(c) for e, c in self.terms.items()}, self.nvars, field)

    ## structure ##

    def is_zero(self):
        return not self.terms

    def degree(self):
        '''Total degree; -1 for the zero polynomial.'''
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, d=None):
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def coefficient(self, e):
        return self.terms.get(tuple(e), self.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def derivative(self, i):
        terms = {}
        for e, c in self.terms.items():
            k = e[i]
            if k == 0:
                continue
            e2 = e[:i] + (k - 1,) + e[i + 1:]
            terms[e2] = c * k
        return MultiPoly._trusted({e: c for e, c in terms.items() if c != 0}, self.nvars, self.field)

    def gradient(self):
        return [self.derivative(i) for i in range(self.nvars)]

    def coefficient_vector(self, d):
        if not self.is_homogeneous(d):
            raise NotHomogeneousError('%s is not homogeneous of degree %d' % (self, d))
        return [self.coefficient(e) for e in monomials_of_degree(self.nvars, d)]

    ## evaluation ##

    def evaluate(self, point, cache=None):
        '''
        Evaluate without coercion or length checks. `cache` maps (i, k) to
        point[i]**k and may be shared across polynomials at the same point.
        '''
        if cache is None:
            cache = {}
        acc = self.field.zero
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k == 0:
                    continue
                key = (i, k)
                x = cache.get(key)
                if x is None:
                    x = point[i] if k == 1 else point[i] ** k
                    cache[key] = x
                term = x * term
            acc = term + acc
        return acc

    def compose(self, polys):
        '''Substitute polys[i] for variable i.'''
        polys = list(polys)
        if len(polys) != self.nvars:
            raise DimensionMismatchError('need %d substitutions, got %d' % (self.nvars, len(polys)))
        if not polys:
            return self
        for q in polys:
            if q.field != self.field:
                raise FieldMismatchError()
        r = self.evaluate(polys)
        if isinstance(r, MultiPoly):
            return r
        return MultiPoly.constant(r, polys[0].nvars, self.field)

    ## text ##

    def format(self, names=None):
        names = _names(names, self.nvars)
        if not self.terms:
            return '0'
        out = []
        for n, (e, c) in enumerate(self.sorted_terms()):
            c = _signed(c)
            neg = c < 0
            mag = -c if neg else c
            factors = ['%s^%d' % (names[i], k) if k > 1 else names[i] for i, k in enumerate(e) if k]
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = '*'.join(factors)
            if n == 0:
                out.append('-' + body if neg else body)
            else:
                out.append(('- ' if neg else '+ ') + body)
        return ' '.join(out)

    def __str__(self):
        return self.format()

    def __repr__(self):
        return 'MultiPoly(%r, %d, %r)' % (self.format(), self.nvars, self.field)

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction, ModP)):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))


def _signed(c):
    ## prime-field coefficients are printed as representatives in (-p/2, p/2] ##
    if isinstance(c, ModP):
        v = c.v
        return v - c.p if v > c.p // 2 else v
    return c


def _names(names, nvars):
    if names is None:
        return ['t%d' % i for i in range(nvars)]
    if len(names) != nvars:
        raise DimensionMismatchError('%d names for %d variables' % (len(names), nvars))
    return list(names)


_TERM = re.compile(r'([+-]?)([^+-]+)')
_NUMBER = re.compile(r'^\d+(?:/\d+)?$')
_POWER = re.compile(r'^([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?$')


def parse_poly(text, nvars, field=QQ, names=None):
    names = _names(names, nvars)
    index = {n: i for i, n in enumerate(names)}
    src = str(text).replace('**', '^').replace(' ', '').replace('\t', '')
    if src == '':
        raise PolyParseError('empty polynomial')
    pos = 0
    terms = {}
    for m in _TERM.finditer(src):
        if m.start() != pos:
            raise PolyParseError('cannot parse %r' % text)
        pos = m.end()
        sign, body = m.group(1), m.group(2)
        coeff = Fraction(-1 if sign == '-' else 1)
        e = [0] * nvars
        for factor in body.split('*'):
            if _NUMBER.match(factor):
                coeff *= Fraction(factor)
                continue
            pm = _POWER.match(factor)
            if pm is None:
                raise PolyParseError('bad factor %r in %r' % (factor, text))
            name = pm.group(1)
            if name not in index:
                raise PolyParseError('unknown variable %r in %r' % (name, text))
            e[index[name]] += int(pm.group(2) or 1)
        e = tuple(e)
        terms[e] = terms.get(e, Fraction(0)) + coeff
    if pos != len(src):
        raise PolyParseError('cannot parse %r' % text)
    try:
        return MultiPoly({e: field(c) for e, c in terms.items()}, nvars, field)
    except ZeroDivisionError:
        raise PolyParseError('coefficient denominator vanishes in %r over %r' % (text, field))


def poly_eval(p, point):
    if len(point) != p.nvars:
        raise DimensionMismatchError('point has length %d, expected %d' % (len(point), p.nvars))
    return p.evaluate([p.field(x) for x in point])


def coefficient_rank(polys, d):
    '''Rank of the coefficient matrix of degree-d forms in the grlex monomial basis.'''
    polys = list(polys)
    if not polys:
        return 0
    field = polys[0].field
    rows = [p.coefficient_vector(d) for p in polys]
    ncols = len(monomials_of_degree(polys[0].nvars, d))
    return Matrix(rows, field, ncols).rank()


class PolyMatrix:

    def __init__(self, entries, nvars=None, field=None):
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            raise DimensionMismatchError('empty polynomial matrix')
        first = entries[0][0]
        self.nvars = first.nvars if nvars is None else nvars
        self.field = first.field if field is None else field
        self.ncols = len(entries[0])
        for r in entries:
            if len(r) != self.ncols:
                raise DimensionMismatchError('ragged polynomial matrix')
            for p in r:
                if p.field != self.field:
                    raise FieldMismatchError()
                if p.nvars != self.nvars:
                    raise DimensionMismatchError('entry in %d variables, expected %d' % (p.nvars, self.nvars))
        self.nrows = len(entries)
        self.entries = tuple(tuple(r) for r in entries)

    @classmethod
    def from_strings(cls, rows, nvars, field=QQ, names=None):
        return cls([[parse_poly(s, nvars, field, names) for s in r] for r in rows], nvars, field)

    def to_strings(self, names=None):
        return [[p.format(names) for p in r] for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def row_degrees(self):
        return [max(p.degree() for p in r) for r in self.entries]

    def is_row_homogeneous(self):
        for r, d in zip(self.entries, self.row_degrees()):
            if not all(p.is_zero() or p.is_homogeneous(d) for p in r):
                return False
        return True

    def is_linear(self):
        return all(p.degree() <= 1 for r in self.entries for p in r)

    def evaluate_raw(self, values):
        '''Entries at unchecked values (field elements or jets).'''
        cache = {}
        return [[p.evaluate(values, cache) for p in r] for r in self.entries]

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise DimensionMismatchError('point has length %d, expected %d' % (len(point), self.nvars))
        pt = [self.field(x) for x in point]
        return Matrix._trusted(self.evaluate_raw(pt), self.field, self.ncols)

    def over(self, field):
        return PolyMatrix([[p.over(field) for p in r] for r in self.entries], self.nvars, field)

    def compose(self, polys):
        return PolyMatrix([[p.compose(polys) for p in r] for r in self.entries])

    def right_multiply(self, m):
        '''self (polynomial) times a constant Matrix.'''
        if m.field != self.field:
            raise FieldMismatchError()
        if m.nrows != self.ncols:
            raise DimensionMismatchError('cannot multiply %d columns by %d rows' % (self.ncols, m.nrows))
        out = []
        for r in self.entries:
            row = []
            for j in range(m.ncols):
                acc = MultiPoly.zero(self.nvars, self.field)
                for k, p in enumerate(r):
                    c = m.entries[k][j]
                    if c != 0 and not p.is_zero():
                        acc = acc + p * c
                row.append(acc)
            out.append(row)
        return PolyMatrix(out, self.nvars, self.field)

    def minors2(self):
        '''All 2x2 minors of a 2-row matrix, keyed by column pair (i, j), i < j.'''
        if self.nrows != 2:
            raise DimensionMismatchError('2x2 minors need a 2-row matrix')
        a, b = self.entries
        return {(i, j): a[i] * b[j] - a[j] * b[i] for i, j in combinations(range(self.ncols), 2)}

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return 'PolyMatrix(%r)' % (self.to_strings(),)
