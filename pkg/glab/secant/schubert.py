#!/usr/bin/python3

'''
Schubert divisors H_Π against line families and over small Grassmannians:
the singular locus of H_Π is the set of lines inside Π, and on a linear
family the restriction of H_Π is twice the locus Y_Π.
'''

import logging

from glab.errors import DegenerateEvaluationError
from glab.exact.field import GF, QQ
from glab.exact.matrix import Matrix
from glab.families.sampling import make_rng, random_combination, random_point, trials_bar
from glab.geometry.grassmann import schubert_form, schubert_singular
from glab.geometry.proj_space import Line, contains, enumerate_subspaces, random_subspace, span_all
from glab.poly.multipoly import MultiPoly
from glab.secant.secant_lab import draw_witness, witness_space
from glab.settings import hparams

logger = logging.getLogger(__name__)


def singular_iff_contained(form, line):
    '''(on divisor, agrees) for one line: off-divisor lines agree vacuously.'''
    if form.at_line(line) != 0:
        return False, True
    return True, schubert_singular(form, line) == contains(form.subspace, line)


def schubert_exhaustive_check(prime=None):
    '''Every pair (Π, L) of lines in P^3 over a small prime field.'''
    F = GF(hparams['schubert_prime'] if prime is None else prime)
    lines = list(enumerate_subspaces(3, 1, F))
    on = 0
    mismatches = 0
    for pi in lines:
        form = schubert_form(pi)
        for line in lines:
            hit, ok = singular_iff_contained(form, line)
            on += hit
            mismatches += not ok
    return {'prime': F.p, 'lines': len(lines), 'pairs': len(lines) ** 2, 'on_divisor': on,
            'mismatches': mismatches, 'pass': mismatches == 0}


def _line_through(p, q, field):
    m = Matrix([p, q], field)
    if m.rank() < 2:
        raise DegenerateEvaluationError('coincident points')
    return Line(m)


def schubert_random_check(N=5, trials=None, seed=None, field=None):
    '''
    Random codimension-2 spaces Π in P^N against lines inside Π, lines
    meeting Π in a point and random lines.
    '''
    trials = hparams['pair_trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    field = QQ if field is None else field
    counts = {'inside': 0, 'meeting': 0, 'random_on_divisor': 0, 'off_divisor': 0}
    mismatches = 0
    for i in trials_bar(trials, 'schubert random'):
        rng = make_rng(seed, 80000 + i)
        pi = random_subspace(N, N - 2, field, rng)
        form = schubert_form(pi)
        kind = ('inside', 'meeting', 'random')[i % 3]
        try:
            if kind == 'inside':
                line = _line_through(random_combination(pi.rows(), field, rng),
                                     random_combination(pi.rows(), field, rng), field)
            elif kind == 'meeting':
                line = _line_through(random_combination(pi.rows(), field, rng),
                                     random_point(N + 1, field, rng), field)
            else:
                line = _line_through(random_point(N + 1, field, rng), random_point(N + 1, field, rng), field)
        except DegenerateEvaluationError:
            continue
        hit, ok = singular_iff_contained(form, line)
        if kind == 'random':
            counts['random_on_divisor' if hit else 'off_divisor'] += 1
        else:
            counts[kind] += 1
        if not ok:
            mismatches += 1
            logger.warning('schubert mismatch: Π=%r line=%r', pi, line)
    report = {'N': N, 'trials': trials, 'mismatches': mismatches, 'pass': mismatches == 0}
    report.update(counts)
    return report


def _square_multiple(lam, ell):
    '''The scalar c with lam = c * ell^2, or None.'''
    sq = ell * ell
    if sq.is_zero():
        return None
    e, c0 = sq.sorted_terms()[0]
    c = lam.coefficient(e) / c0
    if c == 0 or lam != sq * c:
        return None
    return c


def schubert_restriction_check(family, trials=None, seed=None, lines_per_trial=3):
    '''
    For Π spanned by n general members of a linear family in P^{2n+1}, the
    Schubert form restricted to the family is c * l^2 with c != 0, where l
    cuts out Y_Π, and every sampled member inside Π is singular on H_Π.
    '''
    trials = hparams['trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    field = family.field
    n = family.dim
    row0, row1 = family.matrix.entries
    failures = 0
    singular_checked = 0
    example = None
    for i in trials_bar(trials, 'schubert restriction'):
        rng = make_rng(seed, 90000 + i)
        members = [family.sample(rng)[1] for _ in range(n)]
        pi = span_all(members)
        if pi.dim != family.N - 2:
            logger.debug('restriction trial %d: span has dim %d', i, pi.dim)
            failures += 1
            continue
        form = schubert_form(pi)
        lam = form.bilinear(row0, row1)
        space = witness_space(family, pi)
        cut = space.kernel_basis()
        if cut.nrows != 1:
            failures += 1
            continue
        ell = MultiPoly.linear_form(list(cut.row(0)), field)
        c = _square_multiple(lam, ell)
        ok = c is not None
        for _ in range(lines_per_trial):
            u = draw_witness(family, space, rng)
            line = family.evaluate(u)
            singular_checked += 1
            if not contains(pi, line) or not schubert_singular(form, line):
                ok = False
        if example is None:
            example = {'restriction': lam.format(), 'linear_form': ell.format(),
                       'multiple': None if c is None else str(c)}
        failures += not ok
    return {'family': family.name, 'trials': trials, 'lines_checked': singular_checked,
            'failures': failures, 'example': example, 'pass': failures == 0}
