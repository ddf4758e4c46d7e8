#!/usr/bin/python3

'''
Seeded sampling helpers shared by every randomized estimator.

Each estimator draws from numpy generators seeded with [seed, stream], so a
run is fully determined by its seed and the order of its trials.
'''

import logging
from itertools import product

import numpy as np
from tqdm import tqdm

from glab.errors import DegenerateEvaluationError
from glab.settings import hparams

logger = logging.getLogger(__name__)


def make_rng(seed, stream=0):
    return np.random.default_rng([int(seed), int(stream)])


def trials_bar(n, desc):
    return tqdm(range(n), desc=desc, leave=False, disable=not hparams['progress'])


def random_point(nvars, field, rng):
    '''A nonzero random parameter vector.'''
    for _ in range(hparams['max_resample']):
        t = [field.random(rng) for _ in range(nvars)]
        if any(x != 0 for x in t):
            return t
    raise DegenerateEvaluationError('too many consecutive zero parameter vectors')


def random_combination(rows, field, rng):
    '''A random nonzero combination of the given vectors.'''
    n = len(rows[0])
    for _ in range(hparams['max_resample']):
        c = [field.random(rng) for _ in rows]
        v = [sum((a * r[j] for a, r in zip(c, rows)), field.zero) for j in range(n)]
        if any(x != 0 for x in v):
            return v
    raise DegenerateEvaluationError('too many consecutive zero combinations')


def resampled(draw, rng, what='sample'):
    '''Call draw(rng) until it stops raising DegenerateEvaluationError.'''
    for attempt in range(hparams['max_resample']):
        try:
            return draw(rng)
        except DegenerateEvaluationError as e:
            logger.debug('degenerate %s resampled (%d): %s', what, attempt, e)
    raise DegenerateEvaluationError('too many consecutive degenerate samples (%s)' % what)


def max_over_trials(estimate, trials, seed, desc, stream=0):
    '''Maximum of estimate(rng) over seeded trials; generic ranks only undershoot.'''
    best = None
    for i in trials_bar(trials, desc):
        rng = make_rng(seed, stream * 100003 + i)
        value = resampled(estimate, rng, desc)
        if best is None or value > best:
            best = value
    return best


def projective_points(n, field):
    '''All points of P^n over a finite field, first nonzero coordinate 1.'''
    elements = field.elements()
    z, o = field.zero, field.one
    for lead in range(n + 1):
        for tail in product(elements, repeat=n - lead):
            yield [z] * lead + [o] + list(tail)


def soundness_bound(degree, field):
    '''Per-trial probability that a nonzero polynomial of this degree vanishes at a random point.'''
    if field.size is None:
        return None
    return min(1.0, degree / field.size)
