#!/usr/bin/python3

import os

from glab.errors import UsageError

hparams = {
    'seed': 1,
    'trials': 20, ## generic-rank estimators take the max over this many samples
    'pair_trials': 1000,
    'jet_trials': 200,
    'immersion_points': 100,
    'sample_bound': 1000, ## rational samples are integers in [-bound, bound]
    'default_prime': 2147483647,
    'min_cli_prime': 10 ** 6,
    'max_resample': 100,
    'max_n_veronese': 6,
    'max_r_scroll': 4,
    'min_n_ix': 2,
    'max_n_ix': 4,
    'cofactor_limit': 6, ## jet determinants above this size use elimination
    'injectivity_prime': 5,
    'projectability_prime': 7,
    'schubert_prime': 3,
    'quadric_lines': 5,
    'quadric_points_per_line': 3,
    'quadric_check_lines': 5,
    'schema': 1,
    'json_indent': 2,
    'progress': False,
    'dual_meet_pairs': 100, ## random dual-plane pairs besides the fixed one
}


def check_seed(seed, source='--seed'):
    try:
        seed = int(seed)
    except (TypeError, ValueError):
        raise UsageError('%s must be a non-negative integer, got %r' % (source, seed))
    if seed < 0:
        raise UsageError('%s must be a non-negative integer, got %d' % (source, seed))
    return seed


def default_seed():
    seed = os.environ.get('GLAB_SEED')
    if seed is None or seed.strip() == '':
        return hparams['seed']
    return check_seed(seed.strip(), 'GLAB_SEED')
