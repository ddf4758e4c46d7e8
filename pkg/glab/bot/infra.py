#!/usr/bin/python3

'''
Randomized properties of the exact layers, counted rather than asserted so
the infra command can run them at scale: Plücker round trip and relations,
the modular dimension law, the chain rule, jets against symbolic
derivatives and rank symmetry.
'''

import logging

from glab.exact.field import QQ
from glab.exact.matrix import Matrix
from glab.families.sampling import make_rng, random_point, trials_bar
from glab.geometry.grassmann import line_from_plucker, plucker, plucker_relations_ok
from glab.geometry.proj_space import contains, meet, random_subspace, span
from glab.poly.jet import jacobian_at
from glab.poly.multipoly import MultiPoly, monomials_of_degree
from glab.settings import hparams

logger = logging.getLogger(__name__)


def random_poly(rng, nvars, degree, field, nterms=4):
    terms = {}
    for _ in range(nterms):
        d = int(rng.integers(0, degree + 1))
        mons = monomials_of_degree(nvars, d)
        terms[mons[int(rng.integers(0, len(mons)))]] = field.random(rng)
    return MultiPoly(terms, nvars, field)


def plucker_round_trip(rng, field):
    N = int(rng.integers(3, 6))
    line = random_subspace(N, 1, field, rng)
    v = plucker(line)
    return plucker_relations_ok(v) and line_from_plucker(v) == line


def modular_law(rng, field):
    N = int(rng.integers(2, 6))
    a = random_subspace(N, int(rng.integers(0, N + 1)), field, rng)
    b = random_subspace(N, int(rng.integers(0, N + 1)), field, rng)
    m = meet(a, b)
    s = span(a, b)
    return s.dim + m.dim == a.dim + b.dim and contains(a, m) and contains(b, m) and contains(s, a)


def chain_rule(rng, field):
    inner = [random_poly(rng, 2, 2, field) for _ in range(3)]
    outer = [random_poly(rng, 3, 2, field) for _ in range(2)]
    composed = [p.compose(inner) for p in outer]
    x = random_point(2, field, rng)
    y = [q.evaluate(x) for q in inner]
    return jacobian_at(composed, x) == jacobian_at(outer, y) @ jacobian_at(inner, x)


def jet_jacobian(rng, field):
    polys = [random_poly(rng, 3, 3, field) for _ in range(3)]
    x = random_point(3, field, rng)
    symbolic = Matrix([[p.derivative(i).evaluate(x) for i in range(3)] for p in polys], field)
    return jacobian_at(polys, x) == symbolic


def rank_symmetry(rng, field):
    nrows, ncols = int(rng.integers(1, 6)), int(rng.integers(1, 6))
    ## low-rank products so the ranks are not always full ##
    k = int(rng.integers(1, 4))
    a = Matrix([[field.random(rng) for _ in range(k)] for _ in range(nrows)], field)
    b = Matrix([[field.random(rng) for _ in range(ncols)] for _ in range(k)], field)
    m = a @ b
    return m.rank() == m.transpose().rank()


CHECKS = {
    'plucker_round_trip': plucker_round_trip,
    'modular_law': modular_law,
    'chain_rule': chain_rule,
    'jet_jacobian': jet_jacobian,
    'rank_symmetry': rank_symmetry,
}


def infra_checks(trials=None, seed=None, field=None, names=None):
    trials = hparams['pair_trials'] if trials is None else trials
    seed = hparams['seed'] if seed is None else seed
    field = QQ if field is None else field
    out = {}
    for offset, name in enumerate(sorted(CHECKS)):
        if names is not None and name not in names:
            continue
        check = CHECKS[name]
        failures = 0
        for i in trials_bar(trials, name):
            rng = make_rng(seed, 100000 * (offset + 1) + i)
            if not check(rng, field):
                failures += 1
                logger.warning('%s failed at trial %d', name, i)
        out[name] = {'cases': trials, 'failures': failures}
    return out
