#!/usr/bin/python3

'''
glab command line.

    glab veronese --n 2 [--field q|p] [--prime P] [--trials T] [--jet-trials J] [--seed S] [--json PATH]
    glab secant --n 3 --kmax 3
    glab scroll --r 2
    glab ix-tangent --n 2
    glab family check PATH.json [--center CENTER.json]
    glab quadric --n 2
    glab schubert
    glab infra

Exit codes: 0 every check passed, 1 a check failed, 2 usage or input error.
'''

import argparse
import logging
import sys

from glab.bot.commands import (RunConfig, cmd_family_check, cmd_infra, cmd_ix_tangent, cmd_quadric, cmd_scroll,
                               cmd_schubert, cmd_secant, cmd_veronese)
from glab.errors import FamilyFormatError, GlabError, UsageError
from glab.settings import hparams

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        raise UsageError(message)


def _common():
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument('--field', choices=['q', 'p'], default='q', help='rationals or a large prime field')
    parser.add_argument('--prime', type=int, default=None, help='prime for --field p, must exceed 10^6')
    parser.add_argument('--trials', type=int, default=None, help='random trials per estimator')
    parser.add_argument('--jet-trials', type=int, default=None, help='first-order pairs for projectability')
    parser.add_argument('--seed', type=int, default=None, help='default from GLAB_SEED')
    parser.add_argument('--json', type=str, default=None, help='write the JSON report here, - for stdout')
    parser.add_argument('--progress', action='store_true', help='show progress bars')
    parser.add_argument('--verbose', action='store_true', help='DEBUG logging')
    parser.add_argument('--unsafe-size', action='store_true', help='lift the size guards')
    parser.add_argument('--exhaustive', action='store_true', help='add the exhaustive small-field pass')
    parser.add_argument('--no-color', action='store_true', help='plain PASS/FAIL tags')
    return parser


def build_parser():
    common = _common()
    parser = _Parser(prog='glab', description='Exact checks on line families in Grassmannians.')
    sub = parser.add_subparsers(dest='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('veronese', parents=[common], help='double Veronese and its projection')
    p.add_argument('--n', type=int, required=True)

    p = sub.add_parser('secant', parents=[common], help='secant table and superadditivity')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--kmax', type=int, default=None)

    p = sub.add_parser('scroll', parents=[common], help='the scroll example and its lift')
    p.add_argument('--r', type=int, required=True)

    p = sub.add_parser('ix-tangent', parents=[common], help='tangent space of the incidence variety')
    p.add_argument('--n', type=int, required=True)

    p = sub.add_parser('family', help='user families from JSON')
    actions = p.add_subparsers(dest='action', parser_class=_Parser)
    actions.required = True
    check = actions.add_parser('check', parents=[common])
    check.add_argument('path')
    check.add_argument('--center', type=str, default=None)

    p = sub.add_parser('quadric', parents=[common], help='ruling quadric of secant 3-spaces')
    p.add_argument('--n', type=int, required=True)

    sub.add_parser('schubert', parents=[common], help='singular locus of Schubert divisors')
    sub.add_parser('infra', parents=[common], help='properties of the exact layers')
    return parser


def config_from_args(args):
    size = getattr(args, 'n', None)
    if size is None:
        size = getattr(args, 'r', None)
    return RunConfig(
        command=args.command,
        size=size,
        field=RunConfig.field_for(args.field, args.prime),
        trials=args.trials,
        jet_trials=args.jet_trials,
        seed=args.seed,
        output=args.json,
        unsafe_size=args.unsafe_size,
        exhaustive=args.exhaustive,
        kmax=getattr(args, 'kmax', None),
        path=getattr(args, 'path', None),
        center=getattr(args, 'center', None),
    )


def run(args, config):
    if args.command == 'veronese':
        return cmd_veronese(args.n, config)
    if args.command == 'secant':
        return cmd_secant(args.n, args.kmax, config)
    if args.command == 'scroll':
        return cmd_scroll(args.r, config)
    if args.command == 'ix-tangent':
        return cmd_ix_tangent(args.n, config)
    if args.command == 'family':
        return cmd_family_check(args.path, args.center, config)
    if args.command == 'quadric':
        return cmd_quadric(args.n, config)
    if args.command == 'schubert':
        return cmd_schubert(config)
    return cmd_infra(config)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                            format='%(levelname)s %(name)s: %(message)s')
        hparams['progress'] = args.progress
        config = config_from_args(args)
        report = run(args, config)
    except (UsageError, FamilyFormatError, OSError) as e:
        print('glab: error: %s' % e, file=sys.stderr)
        return 2
    except GlabError as e:
        print('glab: %s: %s' % (type(e).__name__, e), file=sys.stderr)
        return 1

    if args.json != '-':
        report.print_summary(color=not args.no_color)
    if args.json is not None:
        report.write_json(args.json)
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
