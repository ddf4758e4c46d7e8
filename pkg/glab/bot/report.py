#!/usr/bin/python3

'''
Reports assembled by the glab commands: a config echo, named checks
{name, expected, observed, pass}, free-form details and timing. Printed as
one coloured line per check and written as versioned JSON.
'''

import json
import logging
import sys
import time
from fractions import Fraction

import numpy as np
from colorama import Fore, Style, init

from glab.exact.field import ModP
from glab.families.sampling import soundness_bound
from glab.geometry.proj_space import ProjSubspace
from glab.settings import hparams

logger = logging.getLogger(__name__)


def jsonable(x):
    '''Plain JSON types; exact scalars become strings such as "3/7".'''
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (Fraction, ModP)):
        return str(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, ProjSubspace):
        return [[str(a) for a in r] for r in x.rows()]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, 'to_dict'):
        return jsonable(x.to_dict())
    return repr(x)


class Report:

    def __init__(self, command, config=None):
        self.command = command
        self.config = config
        self.checks = {}
        self.details = {}
        self.started = time.time()
        self.finished = None

    def check(self, name, expected, observed, passed=None):
        if passed is None:
            passed = expected == observed
        self.checks[name] = {'name': name, 'expected': expected, 'observed': observed, 'pass': bool(passed)}
        logger.debug('%s: %s expected %r observed %r', self.command, name, expected, observed)
        return passed

    def detail(self, name, value):
        self.details[name] = value

    def finish(self):
        self.finished = time.time()
        return self

    @property
    def passed(self):
        return all(c['pass'] for c in self.checks.values())

    @property
    def exit_code(self):
        return 0 if self.passed else 1

    def soundness(self):
        field = self.config.field if self.config is not None else None
        if field is None or field.size is None:
            return None
        return {
            'field': repr(field),
            'per_trial_bound_degree_1': soundness_bound(1, field),
            'note': 'a nonzero polynomial of degree d vanishes at a random point with probability <= d/p',
        }

    def to_dict(self, timing=True):
        doc = {
            'schema': hparams['schema'],
            'command': self.command,
            'config': self.config.to_dict() if self.config is not None else {},
            'checks': [self.checks[k] for k in sorted(self.checks)],
            'details': self.details,
            'pass': self.passed,
        }
        sound = self.soundness()
        if sound is not None:
            doc['soundness'] = sound
        if timing:
            end = self.finished if self.finished is not None else time.time()
            doc['timing'] = {'seconds': round(end - self.started, 3)}
        return jsonable(doc)

    def to_json(self, timing=True):
        return json.dumps(self.to_dict(timing), indent=hparams['json_indent'], sort_keys=True)

    def write_json(self, path):
        text = self.to_json()
        if path == '-':
            sys.stdout.write(text + '\n')
            return
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text + '\n')
        logger.info('report written to %s', path)

    def summary_lines(self, color=True):
        lines = []
        for name in self.checks:
            c = self.checks[name]
            lines.append('%s %s: expected %s, observed %s' % (
                _tag(c['pass'], color), name, _short(c['expected']), _short(c['observed'])))
        lines.append('%s %s (%d checks)' % (_tag(self.passed, color), self.command, len(self.checks)))
        return lines

    def print_summary(self, out=None, color=True):
        out = sys.stdout if out is None else out
        if color:
            init()
        for line in self.summary_lines(color):
            print(line, file=out)


def _tag(ok, color=True):
    word = 'PASS' if ok else 'FAIL'
    if not color:
        return '[%s]' % word
    return '[' + (Fore.GREEN if ok else Fore.RED) + word + Style.RESET_ALL + ']'


def _short(x):
    s = json.dumps(jsonable(x))
    if len(s) > 60:
        s = s[:57] + '...'
    return s
