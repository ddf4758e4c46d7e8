#!/usr/bin/python3

'''
Incidence conditions on a projection center Λ against a line family:

    (*)  two skew members span a P^3 meeting Λ in at most a point
    (**) two meeting members span a plane disjoint from Λ

Pairs are random, user supplied, first-order (a member and its derivative
in one tangent direction) or exhaustive over a small prime field. Only
first-order infinitely close pairs are examined.
'''

import logging
from itertools import combinations

from glab.errors import DegenerateEvaluationError
from glab.exact.field import GF
from glab.exact.matrix import Matrix
from glab.families.line_families import ProjectionMap
from glab.families.sampling import make_rng, projective_points, resampled, trials_bar
from glab.geometry.proj_space import meet, span, subspace_from_rows
from glab.poly.jet import Jet, jet_direction, value_of
from glab.settings import hparams

logger = logging.getLogger(__name__)

SKEW = 'skew-(*)'
COPLANAR = 'coplanar-(**)'


def _strs(v):
    return [str(x) for x in v]


class ProjectabilityReport:

    def __init__(self, family, projection):
        self.family = family.name
        self.center = projection.center
        self.pairs_tested = 0
        self.jet_pairs_tested = 0
        self.extra_pairs_tested = 0
        self.exhaustive = None
        self.skipped = 0
        self.modular_law_checks = 0
        self.modular_law_failures = 0
        self.violations = []
        self.first_order_only = True

    @property
    def passed(self):
        return not self.violations and self.modular_law_failures == 0

    def to_dict(self):
        return {
            'family': self.family,
            'center': [_strs(r) for r in self.center.rows()],
            'center_dim': self.center.dim,
            'pairs_tested': self.pairs_tested,
            'jet_pairs_tested': self.jet_pairs_tested,
            'extra_pairs_tested': self.extra_pairs_tested,
            'exhaustive': self.exhaustive,
            'skipped_coincident': self.skipped,
            'modular_law_checks': self.modular_law_checks,
            'modular_law_failures': self.modular_law_failures,
            'violations': self.violations,
            'first_order_only': self.first_order_only,
            'pass': self.passed,
        }


def _modular_ok(report, a, b, joined, common):
    report.modular_law_checks += 1
    if joined.dim + common.dim != a.dim + b.dim:
        report.modular_law_failures += 1
        logger.warning('modular dimension law failed: %d + %d != %d + %d', joined.dim, common.dim, a.dim, b.dim)


def classify(report, a, b, center, witness, source):
    '''
    Apply (*) or (**) to the span of two lines (or a line and its first-order
    neighbour). Returns the violation recorded, if any.
    '''
    s = span(a, b)
    _modular_ok(report, a, b, s, meet(a, b))
    return _check_span(report, s, center, witness, source)


def _check_span(report, s, center, witness, source):
    m = meet(s, center)
    _modular_ok(report, s, center, span(s, center), m)
    violation = None
    if s.dim == 3:
        if m.dim > 0:
            violation = {'pair': witness, 'kind': SKEW, 'meet_dim': m.dim, 'source': source}
    elif s.dim == 2:
        if not m.is_empty():
            violation = {'pair': witness, 'kind': COPLANAR, 'meet_dim': m.dim, 'source': source}
    else:
        report.skipped += 1
        logger.debug('coincident %s pair skipped: %s', source, witness)
        return None
    if violation is not None:
        report.violations.append(violation)
    return violation


def first_order_span(family, t, v):
    '''span(L_t, dL_t[v]): the rows at t and their derivatives in direction v.'''
    field = family.field
    rows = family.matrix.evaluate_raw(jet_direction(t, v, field))
    zero = field.zero
    values = [[value_of(x) for x in r] for r in rows]
    derivs = [[x.inf.get(0, zero) if isinstance(x, Jet) else zero for x in r] for r in rows]
    base = subspace_from_rows(Matrix._trusted(values, field, family.N + 1))
    if base.dim != 1:
        raise DegenerateEvaluationError('rank-deficient member at %s' % _strs(t))
    return base, subspace_from_rows(Matrix._trusted(values + derivs, field, family.N + 1))


def _jet_pair(report, family, center, t, v, source):
    _, s = first_order_span(family, t, v)
    _check_span(report, s, center, {'t': _strs(t), 'direction': _strs(v)}, source)


def _exhaustive(report, family, projection):
    F = GF(hparams['projectability_prime'])
    fam = family.over(F)
    proj = projection.over(F)
    points = list(projective_points(fam.nvars - 1, F))
    members = {}
    for t in points:
        try:
            members[tuple(t)] = fam.evaluate(t)
        except DegenerateEvaluationError:
            logger.debug('degenerate member over %r at %s', F, _strs(t))
    before = len(report.violations)
    pairs = 0
    for (t, a), (s, b) in combinations(members.items(), 2):
        pairs += 1
        classify(report, a, b, proj.center, {'t': _strs(t), 's': _strs(s)}, 'exhaustive')
    jets = 0
    for t in members:
        for v in points:
            if Matrix._trusted([list(t), v], F, len(v)).rank() < 2:
                continue
            jets += 1
            try:
                _jet_pair(report, fam, proj.center, list(t), v, 'exhaustive-jet')
            except DegenerateEvaluationError:
                continue
    report.exhaustive = {'prime': F.p, 'points': len(members), 'pairs': pairs, 'jet_pairs': jets,
                         'violations': len(report.violations) - before}


def projectability_check(family, projection, trials=None, jet_trials=None, seed=None, pairs=None,
                         exhaustive=False):
    '''
    Conditions (*) and (**) for `projection.center` against the family, as a
    ProjectabilityReport. Degenerate span dimensions are kept, not resampled.
    '''
    trials = hparams['pair_trials'] if trials is None else trials
    jet_trials = hparams['jet_trials'] if jet_trials is None else jet_trials
    seed = hparams['seed'] if seed is None else seed
    field = family.field
    center = projection.center
    report = ProjectabilityReport(family, projection)

    for i in trials_bar(trials, 'pairs'):
        rng = make_rng(seed, 50000 + i)
        t, a = family.sample(rng)
        s, b = family.sample(rng)
        report.pairs_tested += 1
        classify(report, a, b, center, {'t': _strs(t), 's': _strs(s)}, 'pair')

    for i in trials_bar(jet_trials, 'jet pairs'):
        rng = make_rng(seed, 60000 + i)

        def draw(r):
            t = family.random_parameter(r)
            v = [field.random(r) for _ in range(family.nvars)]
            return t, v, first_order_span(family, t, v)
        t, v, (_, s) = resampled(draw, rng, 'jet pair')
        report.jet_pairs_tested += 1
        _check_span(report, s, center, {'t': _strs(t), 'direction': _strs(v)}, 'jet')

    for t, s in pairs or []:
        report.extra_pairs_tested += 1
        classify(report, family.evaluate(t), family.evaluate(s), center,
                 {'t': _strs(t), 's': _strs(s)}, 'extra')

    if exhaustive:
        _exhaustive(report, family, projection)

    logger.info('projectability of %s: %d violations', family.name, len(report.violations))
    return report


def sabotaged_projection(family, seed=None):
    '''
    A projection whose center is a line inside <L_t, L_s> for random t, s, so
    the pair (t, s) must violate (*). Returns (projection, t, s).
    '''
    seed = hparams['seed'] if seed is None else seed
    rng = make_rng(seed, 65000)
    t, _ = family.sample(rng)
    s, _ = family.sample(rng)
    mt = family.evaluate_matrix(t)
    ms = family.evaluate_matrix(s)
    rows = [[x + y for x, y in zip(mt.row(i), ms.row(i))] for i in range(2)]
    bad = subspace_from_rows(Matrix(rows, family.field))
    return ProjectionMap.from_center(bad), t, s
