#!/usr/bin/python3

'''
Exact base fields.

Two fields are supported: the rationals, whose elements are plain
`fractions.Fraction` values (always in lowest terms, positive denominator),
and prime fields F_p, whose elements are `ModP` values reduced to [0, p).

Every field object is callable and coerces ints, Fractions, strings such as
"3/7" and its own elements. Mixing elements of different fields raises
FieldMismatchError.
'''

from fractions import Fraction
from functools import lru_cache

import sympy

from glab.errors import FieldMismatchError
from glab.settings import hparams


class ModP:
    __slots__ = ('v', 'p')

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError()
            return other.v
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(o - self.v, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ModP(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError('division by zero in F_%d' % self.p)
        return ModP(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if self.v == 0:
            raise ZeroDivisionError('division by zero in F_%d' % self.p)
        return ModP(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModP(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e):
        if e < 0:
            if self.v == 0:
                raise ZeroDivisionError('division by zero in F_%d' % self.p)
            return ModP(pow(pow(self.v, -1, self.p), -e, self.p), self.p)
        return ModP(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.v == o

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return 'ModP(%d, %d)' % (self.v, self.p)

    def __str__(self):
        return str(self.v)


class Rationals:
    tag = 'Q'
    char = 0
    size = None

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, ModP):
            raise FieldMismatchError()
        if isinstance(x, str):
            return Fraction(x.strip())
        return Fraction(x)

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def owns(self, x):
        return isinstance(x, (Fraction, int)) and not isinstance(x, bool)

    def random(self, rng, bound=None):
        if bound is None:
            bound = hparams['sample_bound']
        return Fraction(int(rng.integers(-bound, bound + 1)))

    def elements(self):
        raise ValueError('the rationals cannot be enumerated')

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash('Q')

    def __repr__(self):
        return 'QQ'


class PrimeField:

    def __init__(self, p):
        p = int(p)
        if p <= 2 or not sympy.isprime(p):
            raise ValueError('prime field needs an odd prime, got %d' % p)
        self.p = p
        self.char = p
        self.size = p
        self.tag = 'GF(%d)' % p

    def __call__(self, x):
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatchError()
            return x
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError('denominator vanishes in ' + self.tag)
            return ModP(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return ModP(int(x), self.p)

    @property
    def zero(self):
        return ModP(0, self.p)

    @property
    def one(self):
        return ModP(1, self.p)

    def owns(self, x):
        return (isinstance(x, ModP) and x.p == self.p) or (isinstance(x, int) and not isinstance(x, bool))

    def random(self, rng, bound=None):
        return ModP(int(rng.integers(0, self.p)), self.p)

    def elements(self):
        return [ModP(i, self.p) for i in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(('GF', self.p))

    def __repr__(self):
        return 'GF(%d)' % self.p


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def field_from_tag(tag):
    '''"Q", "q", "GF(p)" or a bare prime.'''
    tag = str(tag).strip()
    if tag.lower() in ('q', 'qq', 'rationals'):
        return QQ
    if tag.upper().startswith('GF(') and tag.endswith(')'):
        return GF(int(tag[3:-1]))
    return GF(int(tag))


def element_field(x):
    if isinstance(x, ModP):
        return GF(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise FieldMismatchError('not a field element: %r' % (x,))
