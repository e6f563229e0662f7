"""Command-line front end: eval, verify, table and list."""

import argparse
import logging
import sys
from typing import List, Optional

from umbralab import config
from umbralab.app import FUNCTIONS, IdentityLabApp
from umbralab.components.sweep_manager import OUTPUT_FORMATS, SweepSpec
from umbralab.errors import UmbralabError
from umbralab.utils.param_utils import parse_assignments, parse_list, parse_range

logger = logging.getLogger(__name__)

EXIT_USAGE = 2


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


def _add_tolerances(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--tol-abs', type=_positive_float, default=None,
                        help='Absolute tolerance. Defaults to UMBRALAB_TOL_ABS, then the route default.')
    parser.add_argument('--tol-rel', type=_positive_float, default=None,
                        help='Relative tolerance. Defaults to UMBRALAB_TOL_REL, then the route default.')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='umbralab',
        description="Evaluate Bessel-type special functions and check closed-form integral identities numerically.")
    commands = parser.add_subparsers(dest='command', required=True)

    eval_cmd = commands.add_parser('eval', help='Evaluate one function.')
    eval_cmd.add_argument('--fn', required=True, choices=sorted(FUNCTIONS),
                          help='Function name.')
    eval_cmd.add_argument('--params', '--args', dest='params', default='',
                          help='Arguments as name=value pairs, e.g. nu=1,x=2.5')

    verify_cmd = commands.add_parser('verify', help='Check one identity against quadrature.')
    verify_cmd.add_argument('--identity', required=True, help='Identity id (see the list command).')
    verify_cmd.add_argument('--params', default='',
                            help='Parameters as name=value pairs; lists use ";" (coeffs=1;0;1).')
    verify_cmd.add_argument('--format', dest='output_format', choices=('text', 'json'), default='text',
                            help='Report format. Defaults to text.')
    _add_tolerances(verify_cmd)

    table_cmd = commands.add_parser('table', help='Check an identity over a parameter grid.')
    table_cmd.add_argument('--identity', required=True, help='Identity id (see the list command).')
    table_cmd.add_argument('--range', dest='ranges', action='append', default=[],
                           help='Inclusive range name=start..stop[:step]; repeatable.')
    table_cmd.add_argument('--list', dest='lists', action='append', default=[],
                           help='Explicit values name=v1,v2,...; repeatable.')
    table_cmd.add_argument('--fixed', default='',
                           help='Parameters held fixed, as name=value pairs.')
    table_cmd.add_argument('--format', dest='output_format', choices=OUTPUT_FORMATS, default='csv',
                           help='Table format. Defaults to csv.')
    table_cmd.add_argument('--out', default=None, help='Output path. Defaults to standard output.')
    _add_tolerances(table_cmd)

    commands.add_parser('list', help='List the registered identities.')
    return parser


def _sweep_spec(args: argparse.Namespace) -> SweepSpec:
    axes = {}
    for text in args.ranges:
        name, values = parse_range(text)
        axes[name] = values
    for text in args.lists:
        name, values = parse_list(text)
        axes[name] = values
    return SweepSpec(
        identity_id=args.identity,
        axes=axes,
        fixed=parse_assignments(args.fixed),
        tol_abs=args.tol_abs,
        tol_rel=args.tol_rel,
        output_format=args.output_format,
        out_path=args.out,
    )


def run(args: argparse.Namespace, app: IdentityLabApp) -> int:
    if args.command == 'eval':
        return app.cmd_eval(args.fn, parse_assignments(args.params))
    if args.command == 'verify':
        return app.cmd_verify(args.identity, parse_assignments(args.params),
                              args.tol_abs, args.tol_rel, args.output_format)
    if args.command == 'table':
        return app.cmd_table(_sweep_spec(args))
    return app.cmd_list()


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=config.LOG_LEVEL, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')
    args = build_parser().parse_args(argv)
    try:
        return run(args, IdentityLabApp())
    except (UmbralabError, ValueError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
