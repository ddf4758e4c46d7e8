#!/usr/bin/python3

import json
import os

import pytest

from glab.bot.commands import (RunConfig, cmd_family_check, cmd_infra, cmd_ix_tangent, cmd_quadric, cmd_scroll,
                               cmd_secant, cmd_veronese)
from glab.errors import UsageError
from glab.exact.field import GF, QQ
from glab.families.family_json import family_to_dict
from glab.families.line_families import veronese_family


def config(command, **kw):
    kw.setdefault('trials', 4)
    kw.setdefault('jet_trials', 4)
    kw.setdefault('seed', 1)
    return RunConfig(command, **kw)


def test_field_for():
    assert RunConfig.field_for('q') == QQ
    assert RunConfig.field_for('p', 1000003) == GF(1000003)
    assert RunConfig.field_for('p') == GF(2147483647)
    with pytest.raises(UsageError):
        RunConfig.field_for('p', 10007)
    with pytest.raises(UsageError):
        RunConfig.field_for('p', 1000001)


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv('GLAB_SEED', '17')
    assert RunConfig('x').seed == 17
    assert RunConfig('x', seed=3).seed == 3


def test_bad_seeds_are_usage_errors(monkeypatch):
    with pytest.raises(UsageError):
        RunConfig('x', seed=-1)
    monkeypatch.setenv('GLAB_SEED', '-5')
    with pytest.raises(UsageError):
        RunConfig('x')
    monkeypatch.setenv('GLAB_SEED', ' 4 ')
    assert RunConfig('x').seed == 4


def test_secant_n1():
    report = cmd_secant(1, 1, config('secant'))
    assert report.details['table']['rows'] == [[1, 3, 1, 0]]
    assert report.passed


def test_secant_n3():
    report = cmd_secant(3, 3, config('secant'))
    assert report.details['table']['rows'] == [[1, 3, 1, 4], [2, 5, 2, 3], [3, 7, 3, 0]]
    assert report.details['superadditivity'][0]['delta_i_plus_j'] == 2
    assert report.exit_code == 0


def test_secant_tables_agree_across_seeds():
    a = cmd_secant(2, 2, config('secant', seed=1)).details['table']
    b = cmd_secant(2, 2, config('secant', seed=2)).details['table']
    assert a == b


def test_secant_kmax_above_n():
    with pytest.raises(UsageError):
        cmd_secant(2, 3, config('secant'))


@pytest.mark.parametrize('n', [0, 7])
def test_veronese_size_guard(n):
    with pytest.raises(UsageError):
        cmd_veronese(n, config('veronese'))


def test_veronese_n2():
    report = cmd_veronese(2, config('veronese', trials=10))
    assert report.checks['projectability.sabotaged_control']['pass']
    assert report.checks['union_dimension']['observed'] == 3
    assert report.passed
    skew = [c for c in report.to_dict()['checks'] if c['name'] == 'skewness.fraction'][0]
    assert skew['expected'] == skew['observed'] == '1'


def test_veronese_n1_over_a_prime_field():
    report = cmd_veronese(1, config('veronese', field=GF(1000003), trials=10))
    assert 'projectability.exhaustive' in report.checks
    assert report.passed
    assert report.to_dict()['soundness']['field'] == 'GF(1000003)'


@pytest.mark.parametrize('r', [1, 2])
def test_scroll(r):
    report = cmd_scroll(r, config('scroll'))
    assert report.checks['union_dimension']['observed'] == r + 2
    assert report.checks['compressed']['observed'] is True
    assert report.passed


def test_scroll_dual_planes_default_to_a_hundred_pairs():
    report = cmd_scroll(1, config('scroll', trials=None))
    assert report.details['dual_planes']['pairs'] >= 100
    assert report.passed


def test_scroll_guard():
    with pytest.raises(UsageError):
        cmd_scroll(5, config('scroll'))


def test_ix_tangent():
    report = cmd_ix_tangent(2, config('ix-tangent'))
    assert report.checks['codim']['observed'] == 4
    assert report.checks['mutation_control.match']['observed'] is False
    assert report.passed
    with pytest.raises(UsageError):
        cmd_ix_tangent(1, config('ix-tangent'))


def test_quadric():
    assert cmd_quadric(2, config('quadric', trials=2)).passed


def test_infra():
    assert cmd_infra(config('infra', trials=3)).passed


def test_family_check(tmp_path):
    fam = tmp_path / 'veronese.json'
    fam.write_text(json.dumps(family_to_dict(veronese_family(2))))
    center = tmp_path / 'center.json'
    center.write_text(json.dumps({'ambient': 5, 'projection': [[1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0],
                                                               [0, 0, 1, 0, 1, 0], [0, 0, 0, 0, 0, 1]]}))
    report = cmd_family_check(str(fam), str(center), config('family check', exhaustive=True))
    assert report.checks['projectability.violations']['observed'] == 0
    assert report.checks['projectability.exhaustive']['observed'] == 0
    assert report.passed


DATA = os.path.join(os.path.dirname(__file__), '..', '..', 'data')


@pytest.mark.parametrize('family, center', [('veronese_1.json', 'veronese_1_center_rows.json'),
                                            ('veronese_2.json', 'veronese_2_center.json'),
                                            ('scroll_dual_1.json', None)])
def test_shipped_examples(family, center):
    center = None if center is None else os.path.join(DATA, center)
    report = cmd_family_check(os.path.join(DATA, family), center, config('family check'))
    assert report.passed
