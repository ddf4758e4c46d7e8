#!/usr/bin/python3

'''
One function per glab sub-command. Each takes its size argument and a
RunConfig and returns a finished Report; nothing here prints.
'''

import logging
from fractions import Fraction

from glab.errors import GlabError, UsageError
from glab.exact.field import GF, QQ
from glab.families.family_json import load_center, load_family
from glab.families.line_families import (compressedness, double_veronese_check, dual_meet_check,
                                         scroll_lift_report, scroll_line_family, scroll_orthogonality,
                                         union_dimension, veronese_family, veronese_projection)
from glab.secant.ix_tangent import ix_tangent_check, secant_chart_differential_check
from glab.secant.projectability import projectability_check, sabotaged_projection
from glab.secant.ruling_quadric import quadric_trials
from glab.secant.schubert import schubert_exhaustive_check, schubert_random_check, schubert_restriction_check
from glab.secant.secant_lab import (containment_oracle, defect_value, general_position_check, secant_defect,
                                    secant_map_rank, skewness_check, superadditivity_check)
from glab.bot.infra import infra_checks
from glab.bot.report import Report
from glab.settings import check_seed, default_seed, hparams

logger = logging.getLogger(__name__)


class RunConfig:
    '''Everything that determines a run; the seed fixes every random draw.'''

    def __init__(self, command, size=None, field=QQ, trials=None, jet_trials=None, seed=None, output=None,
                 unsafe_size=False, exhaustive=False, kmax=None, path=None, center=None):
        self.command = command
        self.size = size
        self.field = field
        self.trials = trials
        self.jet_trials = jet_trials
        self.seed = default_seed() if seed is None else check_seed(seed)
        self.output = output
        self.unsafe_size = unsafe_size
        self.exhaustive = exhaustive
        self.kmax = kmax
        self.path = path
        self.center = center

    @staticmethod
    def field_for(field='q', prime=None):
        '''--field q|p and --prime P; a CLI prime must be prime and > 10^6.'''
        if prime is None and field in (None, 'q'):
            return QQ
        p = hparams['default_prime'] if prime is None else int(prime)
        if p <= hparams['min_cli_prime']:
            raise UsageError('--prime must exceed %d, got %d' % (hparams['min_cli_prime'], p))
        try:
            return GF(p)
        except ValueError as e:
            raise UsageError(str(e))

    def to_dict(self):
        doc = {
            'command': self.command,
            'size': self.size,
            'field': repr(self.field),
            'trials': self.trials,
            'jet_trials': self.jet_trials,
            'seed': self.seed,
            'unsafe_size': self.unsafe_size,
        }
        for key in ('kmax', 'path', 'center'):
            if getattr(self, key) is not None:
                doc[key] = getattr(self, key)
        if self.exhaustive:
            doc['exhaustive'] = True
        return doc


def _guard(name, value, low, high, config):
    if value is None or value < low:
        raise UsageError('%s must be >= %d' % (name, low))
    if value > high and not config.unsafe_size:
        raise UsageError('%s = %d exceeds the size guard %d (use --unsafe-size)' % (name, value, high))


def cmd_veronese(n, config):
    _guard('n', n, 1, hparams['max_n_veronese'], config)
    report = Report('veronese', config)
    field, seed = config.field, config.seed

    dv = double_veronese_check(n, pair_trials=config.trials, seed=seed, field=field)
    report.check('double_veronese.coefficient_rank', dv['coefficient_rank']['expected'],
                 dv['coefficient_rank']['observed'])
    if 'injectivity_exhaustive' in dv:
        report.check('double_veronese.injectivity_exhaustive', 0, dv['injectivity_exhaustive']['clashes'])
    report.check('double_veronese.injectivity_random', 0, dv['injectivity_random']['clashes'])
    report.check('double_veronese.immersion', 0, dv['immersion']['rank_deficient'])
    report.detail('double_veronese', dv)

    family = veronese_family(n, field)
    proj = projectability_check(family, veronese_projection(n, field), config.trials, config.jet_trials, seed)
    report.check('projectability.violations', 0, len(proj.violations))
    report.check('projectability.modular_law', 0, proj.modular_law_failures)
    report.detail('projectability', proj.to_dict())
    if n == 1 or config.exhaustive:
        ## the exhaustive pass reduces rational coefficients to its own small prime ##
        ex = projectability_check(veronese_family(n), veronese_projection(n), 0, 0, seed, exhaustive=True)
        report.check('projectability.exhaustive', 0, ex.exhaustive['violations'])
        report.detail('projectability_exhaustive', ex.exhaustive)

    bad, t, s = sabotaged_projection(family, seed)
    control = projectability_check(family, bad, trials=0, jet_trials=0, seed=seed, pairs=[(t, s)])
    report.check('projectability.sabotaged_control', '>= 1', len(control.violations), len(control.violations) >= 1)

    report.check('union_dimension', n + 1, union_dimension(family, seed=seed))
    skew = skewness_check(family, config.trials, seed)
    report.check('skewness.fraction', Fraction(1), skew['fraction'])
    sx = secant_map_rank(family, 1, seed=seed)
    report.check('secant_dim.bound', '<= %d' % (2 * n - 2), sx, sx <= 2 * n - 2)
    return report.finish()


def cmd_secant(n, kmax, config):
    _guard('n', n, 1, hparams['max_n_veronese'], config)
    kmax = n if kmax is None else kmax
    if kmax < 1 or kmax > n:
        raise UsageError('kmax must lie in 1..%d, got %d' % (n, kmax))
    report = Report('secant', config)
    family = veronese_family(n, config.field)
    trials, seed = config.trials, config.seed

    table = []
    defects = {0: 0}
    for k in range(1, kmax + 1):
        rep = secant_defect(family, k, trials, seed)
        defects[k] = rep.delta_k
        table.append([k, rep.r_k, rep.delta_k, rep.secant_dim])
        report.check('r_%d' % k, 2 * k + 1, rep.r_k)
        report.check('delta_%d' % k, k, rep.delta_k)
        report.check('secant_dim_%d' % k, (k + 1) * (n - k), rep.secant_dim)
        report.check('span_fiber_dim_%d' % k, (k + 1) * k, rep.span_fiber_dim)
        oracle = containment_oracle(family, k, seed=seed)
        report.check('containment_%d' % k, 0, oracle['failures'])
    report.detail('table', {'columns': ['k', 'r_k', 'delta_k', 'secant_dim'], 'rows': table})

    rows = []
    for i in range(1, kmax + 1):
        for j in range(i, kmax + 1 - i):
            sa = superadditivity_check(family, i, j, trials, seed, defects)
            rows.append(sa)
            report.check('superadditivity_%d_%d' % (i, j), '>= %s' % ((sa['delta_i'] or 0) + (sa['delta_j'] or 0)),
                         sa['delta_i_plus_j'], sa['pass'])
    report.detail('superadditivity', rows)
    return report.finish()


def cmd_scroll(r, config):
    _guard('r', r, 1, hparams['max_r_scroll'], config)
    report = Report('scroll', config)
    field, seed = config.field, config.seed

    orth = scroll_orthogonality(r, field)
    nonzero = sum(not p.is_zero() for row in orth.entries for p in row)
    report.check('orthogonality.nonzero_entries', 0, nonzero)

    meets = dual_meet_check(r, config.trials, seed, field)
    report.check('dual_planes.meet_in_a_point', 0, meets['not_a_point'])
    report.detail('dual_planes', meets)

    lift = scroll_lift_report(r, seed)
    report.check('lift.identity', True, lift['identity'])
    report.check('lift.center', True, lift['center_ok'])
    report.check('lift.span_rank', lift['expected_span_rank'], lift['span_rank'])
    report.detail('lift', lift)

    lines = scroll_line_family(r, field)
    comp = compressedness(lines, n=2 * r + 1, seed=seed)
    report.check('union_dimension', r + 2, comp['union_dimension'])
    report.check('compressed', True, comp['compressed'])
    report.detail('compressedness', comp)
    report.detail('delta_1', defect_value(lines, 1, config.trials, seed))
    return report.finish()


def cmd_ix_tangent(n, config):
    _guard('n', n, hparams['min_n_ix'], hparams['max_n_ix'], config)
    report = Report('ix-tangent', config)
    field = config.field
    rep = ix_tangent_check(n, field)
    report.check('base_on_variety', True, rep.base_on_variety)
    report.check('match', True, rep.match)
    report.check('codim', 2 * n, rep.codim)
    mutated = ix_tangent_check(n, field, mutate=True)
    report.check('mutation_control.match', False, mutated.match)
    chart = secant_chart_differential_check(n, field)
    report.check('chart_differential.rank', chart['expected_rank'], chart['rank'])
    report.check('chart_differential.mismatches', 0, chart['mismatches'])
    report.detail('tangent', rep.to_dict())
    return report.finish()


def cmd_family_check(path, center_path, config):
    '''
    User family and center from JSON: projectability (with the sabotaged
    control when the family is a line family), union dimension, skewness
    and general position, with δ_1 reported.
    '''
    field, seed = config.field, config.seed
    family = load_family(path, field)
    report = Report('family check', config)
    report.detail('family', repr(family))

    comp = compressedness(family, seed=seed)
    report.detail('compressedness', comp)
    if family.rows != 2:
        report.check('union_dimension.exact', True, comp['exact'])
        return report.finish()

    if center_path is not None:
        projection = load_center(center_path, field)
        proj = projectability_check(family, projection, config.trials, config.jet_trials, seed)
        report.check('projectability.violations', 0, len(proj.violations))
        report.detail('projectability', proj.to_dict())
        if config.exhaustive:
            ex = projectability_check(load_family(path), load_center(center_path), 0, 0, seed, exhaustive=True)
            report.check('projectability.exhaustive', 0, ex.exhaustive['violations'])
            report.detail('projectability_exhaustive', ex.exhaustive)

    skew = skewness_check(family, config.trials, seed)
    report.check('skewness.fraction', Fraction(1), skew['fraction'])
    report.detail('general_position', general_position_check(family, config.trials, seed))
    try:
        report.detail('delta_1', secant_defect(family, 1, config.trials, seed).to_dict())
    except GlabError as e:
        report.detail('delta_1', str(e))
    return report.finish()


def cmd_quadric(n, config):
    _guard('n', n, 1, hparams['max_n_veronese'], config)
    report = Report('quadric', config)
    summary = quadric_trials(veronese_family(n, config.field), config.trials, config.seed)
    report.check('quadric.failures', 0, summary['failures'])
    report.detail('quadric', summary)
    return report.finish()


def cmd_schubert(config):
    report = Report('schubert', config)
    ex = schubert_exhaustive_check()
    report.check('exhaustive.lines', 130, ex['lines'])
    report.check('exhaustive.mismatches', 0, ex['mismatches'])
    rnd = schubert_random_check(5, config.trials, config.seed, config.field)
    report.check('random.mismatches', 0, rnd['mismatches'])
    res = schubert_restriction_check(veronese_family(2, config.field), config.trials, config.seed)
    report.check('restriction.failures', 0, res['failures'])
    report.detail('exhaustive', ex)
    report.detail('random', rnd)
    report.detail('restriction', res)
    return report.finish()


def cmd_infra(config):
    report = Report('infra', config)
    for name, result in infra_checks(config.trials, config.seed, config.field).items():
        report.check(name, 0, result['failures'])
        report.detail(name, result)
    return report.finish()
