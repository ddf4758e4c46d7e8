#!/usr/bin/python3

'''
Secant spans of a line family X: r_k, the local dimension of Y_Π at a
witness, the secant defects δ_k, dim S^kX, superadditivity and general
position.

Every generic quantity is an exact rank at a random point, maximized over
seeded trials, so estimates can only undershoot.
'''

import logging
from fractions import Fraction
from itertools import combinations

from glab.errors import (DegenerateEvaluationError, DimensionMismatchError, HypothesisViolatedError,
                         WitnessError)
from glab.exact.matrix import Matrix
from glab.families.sampling import make_rng, max_over_trials, random_combination, resampled, trials_bar
from glab.geometry.proj_space import contains, span_all
from glab.poly.jet import Jet, jacobian_at, jet_det, jet_point, value_of
from glab.poly.multipoly import MultiPoly
from glab.settings import hparams

logger = logging.getLogger(__name__)


def _defaults(trials, seed):
    return (hparams['trials'] if trials is None else trials,
            hparams['seed'] if seed is None else seed)


def span_of_lines(family, params):
    if not params:
        raise DimensionMismatchError('span of an empty set of lines')
    return span_all([family.evaluate(t) for t in params])


def _sample_tuple(family, k, rng):
    '''k+1 parameters with genuine members, and the span of those members.'''
    params = []
    members = []
    for _ in range(k + 1):
        t, s = family.sample(rng)
        params.append(t)
        members.append(s)
    return params, span_all(members)


def generic_span_dim(family, k, trials=None, seed=None):
    '''r_k: generic dimension of the span of k+1 members.'''
    trials, seed = _defaults(trials, seed)
    return max_over_trials(lambda rng: _sample_tuple(family, k, rng)[1].dim, trials, seed,
                           'span k=%d' % k, stream=10 + k)


def containment_polys(family, pi):
    '''Polynomials in t vanishing exactly where every row of F(t) lies in Π.'''
    field = family.field
    out = []
    for f in pi.equations().rows():
        for row in family.matrix.entries:
            acc = MultiPoly.zero(family.nvars, field)
            for a, p in zip(f, row):
                if a != 0 and not p.is_zero():
                    acc = acc + p * a
            out.append(acc)
    return out


def fiber_dimension(family, pi, t, polys=None):
    '''
    Local dimension of Y_Π at the witness t: dim X minus the Jacobian rank
    of the containment constraints. Valid where the locus is smooth.
    '''
    line = family.evaluate(t)
    if not contains(pi, line):
        raise WitnessError('witness %s is not in Y_Π' % [str(x) for x in t])
    if polys is None:
        polys = containment_polys(family, pi)
    if not polys:
        return family.dim
    return family.dim - jacobian_at(polys, t).rank()


def witness_space(family, pi):
    '''
    For a family with linear entries: rows spanning the parameter vectors t
    with F(t) inside Π, i.e. the kernel of the linear containment system.
    '''
    if not family.is_linear():
        raise WitnessError('no witness rule for a family with nonlinear entries')
    field = family.field
    units = [tuple(1 if i == j else 0 for j in range(family.nvars)) for i in range(family.nvars)]
    coeffs = [[p.coefficient(e) for e in units] for p in containment_polys(family, pi)]
    if not coeffs:
        return Matrix.identity(family.nvars, field)
    return Matrix(coeffs, field, family.nvars).kernel_basis()


def draw_witness(family, space, rng):
    '''A random parameter from a witness space whose member is a genuine line.'''
    if space.nrows == 0:
        raise WitnessError('empty witness space')

    def draw(r):
        u = random_combination(space.rows(), family.field, r)
        family.evaluate(u)
        return u
    return resampled(draw, rng, 'witness of ' + family.name)


class SecantReport:

    def __init__(self, family, k, trials, seed):
        self.family = family.name
        self.field = family.field
        self.n = family.dim
        self.N = family.N
        self.k = k
        self.trials = trials
        self.seed = seed
        self.r_k = None
        self.delta_k = None
        self.secant_dim = None
        self.witness_rule = None
        self.witness_failures = 0
        self.method = None

    @property
    def witness_failure(self):
        return self.delta_k is None

    @property
    def expected_secant_dim(self):
        if self.delta_k is None:
            return None
        return (self.k + 1) * (self.n - self.delta_k)

    @property
    def general_position(self):
        return self.r_k == min(2 * self.k + 1, self.N)

    @property
    def span_fiber_dim(self):
        '''Fibre dimension of the span map X^{k+1} -> G(2k+1, N); equals (k+1) * δ_k.'''
        if self.secant_dim is None:
            return None
        return (self.k + 1) * self.n - self.secant_dim

    @property
    def consistent(self):
        if self.witness_failure or self.secant_dim is None:
            return False
        return (self.secant_dim == self.expected_secant_dim
                and self.span_fiber_dim == (self.k + 1) * self.delta_k)

    def to_dict(self):
        return {
            'family': self.family,
            'field': repr(self.field),
            'n': self.n,
            'N': self.N,
            'k': self.k,
            'r_k': self.r_k,
            'delta_k': self.delta_k,
            'secant_dim': self.secant_dim,
            'expected_secant_dim': self.expected_secant_dim,
            'span_fiber_dim': self.span_fiber_dim,
            'general_position': self.general_position,
            'consistent': self.consistent,
            'witness_rule': self.witness_rule,
            'witness_failure': self.witness_failure,
            'witness_failures': self.witness_failures,
            'secant_method': self.method,
            'trials': self.trials,
            'seed': self.seed,
        }

    def __repr__(self):
        return 'SecantReport(k=%d, r_k=%s, delta_k=%s, secant_dim=%s)' % (
            self.k, self.r_k, self.delta_k, self.secant_dim)


def _defect(family, k, trials, seed, report):
    rule = 'parameter-span' if family.is_linear() else 'member'
    report.witness_rule = rule
    logger.debug('secant_defect k=%d on %s: witness rule %s', k, family.name, rule)
    best_delta = None
    best_span = None
    for i in trials_bar(trials, 'defect k=%d' % k):
        rng = make_rng(seed, 20000 + 1000 * k + i)
        params, pi = resampled(lambda r: _sample_tuple(family, k, r), rng, 'secant tuple')
        if best_span is None or pi.dim > best_span:
            best_span = pi.dim
        try:
            if rule == 'parameter-span':
                u = draw_witness(family, witness_space(family, pi), rng)
            else:
                u = params[0]
            d = fiber_dimension(family, pi, u)
        except (WitnessError, DegenerateEvaluationError) as e:
            logger.debug('witness failure at trial %d: %s', i, e)
            report.witness_failures += 1
            continue
        if best_delta is None or d > best_delta:
            best_delta = d
    report.r_k = best_span
    report.delta_k = best_delta
    return best_delta


def secant_defect(family, k, trials=None, seed=None, method='grassmann'):
    '''δ_k, r_k and dim S^kX for one k, as a SecantReport.'''
    if k < 0 or k > family.dim:
        raise DimensionMismatchError('k must lie in 0..%d, got %d' % (family.dim, k))
    trials, seed = _defaults(trials, seed)
    report = SecantReport(family, k, trials, seed)
    _defect(family, k, trials, seed, report)
    report.method = method
    report.secant_dim = secant_map_rank(family, k, trials, seed, method, r_k=report.r_k)
    return report


def _independent_rows(values, field):
    chosen = []
    for i in range(len(values)):
        trial = chosen + [i]
        if Matrix._trusted([values[a] for a in trial], field, len(values[0])).rank() == len(trial):
            chosen = trial
    return chosen


def _grassmann_rank(family, k, rng):
    field = family.field
    zero = field.zero
    nvars = family.nvars
    size = (k + 1) * nvars
    rows = []
    for i in range(k + 1):
        t, _ = family.sample(rng)
        rows.extend(family.matrix.evaluate_raw(jet_point(t, field, i * nvars, size)))
    values = [[value_of(x) for x in r] for r in rows]
    chosen = _independent_rows(values, field)
    basis = Matrix._trusted([values[a] for a in chosen], field, len(values[0]))
    free = [c for c in range(basis.ncols) if c not in basis.pivots()]
    tangent = []
    for d in range(size):
        v = []
        for a in chosen:
            dr = [x.inf.get(d, zero) if isinstance(x, Jet) else zero for x in rows[a]]
            reduced = basis.reduce_vector(dr)
            v.extend(reduced[c] for c in free)
        tangent.append(v)
    return Matrix._trusted(tangent, field, len(free) * len(chosen)).rank()


def _plucker_rank(family, k, rng):
    field = family.field
    nvars = family.nvars
    size = (k + 1) * nvars
    rows = []
    for i in range(k + 1):
        t, _ = family.sample(rng)
        rows.extend(family.matrix.evaluate_raw(jet_point(t, field, i * nvars, size)))
    m = len(rows)
    grads = []
    for cols in combinations(range(family.N + 1), m):
        d = jet_det([[r[c] for c in cols] for r in rows], field)
        grads.append(d.gradient(field.zero))
    return Matrix._trusted(grads, field, size).rank() - 1


def secant_map_rank(family, k, trials=None, seed=None, method='grassmann', r_k=None):
    '''
    dim S^kX: generic rank of the differential of the span map from
    (k+1)-tuples of members to the Grassmannian. "grassmann" reduces the
    derivative rows modulo Π; "plucker" takes the Jacobian of all maximal
    minors, minus one for the projective scaling.
    '''
    trials, seed = _defaults(trials, seed)
    if r_k is None:
        r_k = generic_span_dim(family, k, trials, seed)
    if r_k >= family.N:
        return 0
    if method == 'grassmann':
        estimate = _grassmann_rank
    elif method == 'plucker':
        estimate = _plucker_rank
    else:
        raise ValueError('unknown secant method %r' % method)
    return max_over_trials(lambda rng: estimate(family, k, rng), trials, seed,
                           'secant map k=%d' % k, stream=30 + k)


def general_position_check(family, trials=None, seed=None, kmax=None):
    '''r_k = 2k+1 for k = 1..min((N-1)//2, dim X).'''
    trials, seed = _defaults(trials, seed)
    top = min((family.N - 1) // 2, family.dim)
    if kmax is not None:
        top = min(top, kmax)
    ranks = {}
    ok = True
    for k in range(1, top + 1):
        r = generic_span_dim(family, k, trials, seed)
        ranks[k] = r
        ok = ok and r == 2 * k + 1
    return {'ranks': ranks, 'kmax': top, 'pass': ok}


def defect_value(family, k, trials=None, seed=None):
    if k == 0:
        return 0
    trials, seed = _defaults(trials, seed)
    report = SecantReport(family, k, trials, seed)
    return _defect(family, k, trials, seed, report)


def superadditivity_check(family, i, j, trials=None, seed=None, defects=None):
    '''
    δ_{i+j} >= δ_i + δ_j on a family in general position. `defects` may
    carry already measured values keyed by k.
    '''
    if i < 0 or j < 0 or i + j > family.dim:
        raise DimensionMismatchError('need 0 <= i, j and i + j <= %d' % family.dim)
    trials, seed = _defaults(trials, seed)
    for k in range(1, i + j + 1):
        if 2 * k + 1 > family.N:
            continue
        r = generic_span_dim(family, k, trials, seed)
        if r != 2 * k + 1:
            raise HypothesisViolatedError('hypothesis violated: r_%d = %d, expected %d' % (k, r, 2 * k + 1))
    defects = {} if defects is None else defects

    def delta(k):
        if k not in defects:
            defects[k] = defect_value(family, k, trials, seed)
        return defects[k]

    di, dj, dij = delta(i), delta(j), delta(i + j)
    holds = None not in (di, dj, dij) and dij >= di + dj
    return {
        'i': i,
        'j': j,
        'delta_i': di,
        'delta_j': dj,
        'delta_i_plus_j': dij,
        'equality': holds and dij == di + dj,
        'pass': holds,
    }


def skewness_check(family, trials=None, seed=None):
    '''Fraction of sampled pairs of members spanning a P^3.'''
    trials = hparams['pair_trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    skew = 0
    for i in trials_bar(trials, 'skewness'):
        rng = make_rng(seed, 40000 + i)
        _, a = family.sample(rng)
        _, b = family.sample(rng)
        if a.basis.stack(b.basis).rank() == 4:
            skew += 1
    return {'pairs': trials, 'skew': skew, 'fraction': Fraction(skew, trials) if trials else Fraction(0)}


def containment_oracle(family, k, samples=None, seed=None):
    '''
    Brute-force check of the parameter-span witness rule: every u in the
    span of k+1 random parameters gives a member inside their span Π.
    '''
    samples = 5 * hparams['trials'] if samples is None else samples
    seed = hparams['seed'] if seed is None else seed
    rng = make_rng(seed, 45000 + k)
    params, pi = _sample_tuple(family, k, rng)
    failures = 0
    for _ in range(samples):
        u = resampled(lambda r: _member_in_span(family, params, r), rng, 'span member')
        if not contains(pi, family.evaluate(u)):
            failures += 1
    return {'k': k, 'samples': samples, 'failures': failures, 'pass': failures == 0}


def _member_in_span(family, params, rng):
    u = random_combination(params, family.field, rng)
    family.evaluate(u)
    return u
