#!/usr/bin/python3

'''
Quadric oracle on a secant 3-space Π = <L_t, L_s>: lines of Y_Π are sampled,
a quadric of Π is fitted through points on them, and the fit is checked to
be smooth and to contain every further sampled line of Y_Π.
'''

import logging

from glab.errors import DegenerateEvaluationError, WitnessError
from glab.exact.matrix import Matrix
from glab.families.sampling import make_rng
from glab.geometry.proj_space import span
from glab.poly.multipoly import MultiPoly
from glab.secant.secant_lab import draw_witness, fiber_dimension, witness_space
from glab.settings import hparams

logger = logging.getLogger(__name__)


def quadric_monomials():
    return [(i, j) for i in range(4) for j in range(i, 4)]


def _local(pi, v):
    ## coordinates of a point of Π in its canonical basis: the pivot entries ##
    return [v[p] for p in pi.basis.pivots()]


def _quadric_row(x):
    return [x[i] * x[j] for i, j in quadric_monomials()]


def symmetric_matrix(q, field):
    '''4x4 symmetric matrix of a quadric given by its 10 monomial coefficients.'''
    half = field.one / field(2)
    s = [[field.zero] * 4 for _ in range(4)]
    for (i, j), c in zip(quadric_monomials(), q):
        if i == j:
            s[i][i] = c
        else:
            s[i][j] = c * half
            s[j][i] = c * half
    return Matrix._trusted(s, field, 4)


def _bilinear(s, x, y):
    return sum((x[i] * s[i, j] * y[j] for i in range(4) for j in range(4)), s.field.zero)


def quadric_poly(q, field, names=('x0', 'x1', 'x2', 'x3')):
    terms = {}
    for (i, j), c in zip(quadric_monomials(), q):
        e = [0, 0, 0, 0]
        e[i] += 1
        e[j] += 1
        terms[tuple(e)] = c
    return MultiPoly(terms, 4, field).format(list(names))


def _line_points(line, field, rng):
    r0, r1 = line.basis.rows()
    out = [list(r0), list(r1)]
    while len(out) < hparams['quadric_points_per_line']:
        c = field.random(rng)
        out.append([a + c * b for a, b in zip(r0, r1)])
    return out


def ruling_quadric(family, t, s, seed=None):
    '''
    Report on the quadric through the lines of Y_Π in Π = <L_t, L_s>. Failed
    preconditions and failed fits are report fields, not exceptions.
    '''
    seed = hparams['seed'] if seed is None else seed
    field = family.field
    rng = make_rng(seed, 70000)
    report = {
        't': [str(x) for x in t],
        's': [str(x) for x in s],
        'pass': False,
    }
    lt, ls = family.evaluate(t), family.evaluate(s)
    pi = span(lt, ls)
    report['span_dim'] = pi.dim
    if pi.dim != 3:
        report['precondition'] = 'lines not skew'
        return report

    try:
        if family.is_linear():
            report['witness_rule'] = 'parameter-span'
            space = witness_space(family, pi)
            delta = fiber_dimension(family, pi, draw_witness(family, space, rng))
        else:
            report['witness_rule'] = 'member'
            space = None
            delta = fiber_dimension(family, pi, t)
    except (WitnessError, DegenerateEvaluationError) as e:
        report['precondition'] = 'no witness: %s' % e
        return report
    report['delta_1'] = delta
    if delta < 1:
        report['precondition'] = 'delta_1 = %d < 1' % delta
        return report
    if space is None:
        report['precondition'] = 'no witness rule to sample lines of Y_Π'
        return report

    nfit = hparams['quadric_lines']
    ncheck = hparams['quadric_check_lines']
    lines = []
    for _ in range(nfit + ncheck):
        u = draw_witness(family, space, rng)
        lines.append(family.evaluate(u))
    skew = all(a.basis.stack(b.basis).rank() == 4
               for k, a in enumerate(lines) for b in lines[k + 1:])
    report['pairwise_skew'] = skew

    rows = []
    for line in lines[:nfit]:
        for v in _line_points(line, field, rng):
            rows.append(_quadric_row(_local(pi, v)))
    system = Matrix._trusted(rows, field, 10)
    rank = system.rank()
    report['fit_rank'] = rank
    report['points'] = len(rows)
    if rank == 10:
        report['quadric'] = 'not on a quadric'
        return report
    report['unique'] = rank == 9
    q = system.kernel_basis().row(0)
    sym = symmetric_matrix(q, field)
    report['quadric'] = quadric_poly(q, field)
    report['symmetric_rank'] = sym.rank()
    report['smooth'] = report['symmetric_rank'] == 4

    bad = 0
    for line in lines:
        p0, p1 = [_local(pi, v) for v in line.basis.rows()]
        if _bilinear(sym, p0, p0) != 0 or _bilinear(sym, p1, p1) != 0 or _bilinear(sym, p0, p1) != 0:
            bad += 1
    report['lines_checked'] = len(lines)
    report['lines_off_quadric'] = bad
    report['pass'] = report['unique'] and report['smooth'] and skew and bad == 0
    logger.debug('ruling_quadric: %s', report['quadric'])
    return report


def quadric_trials(family, trials=None, seed=None):
    '''ruling_quadric over random secant 3-spaces; summary counts.'''
    trials = hparams['trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    failures = []
    example = None
    for i in range(trials):
        rng = make_rng(seed, 71000 + i)
        t, _ = family.sample(rng)
        s, _ = family.sample(rng)
        r = ruling_quadric(family, t, s, seed=seed * 1000003 + i)
        if example is None:
            example = r
        if not r['pass']:
            failures.append(r)
    return {'trials': trials, 'failures': len(failures), 'example': example,
            'first_failure': failures[0] if failures else None, 'pass': not failures}
