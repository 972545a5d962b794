#!/usr/bin/env python
"""Command-line front end.

    griesskit positivity --n 3 --m-max 6 --format json
    griesskit autos --n 5
    griesskit lattice-verify --n 3 --m 2
    griesskit scan --n 6 --m-max 10 --num_workers 4 --out scan.csv --format csv

Reports go to standard output (or --out), diagnostics to standard error. Exit codes:
0 success, 1 a verification found a failing identity, 2 bad parameters.
"""

import argparse
import logging
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

from test_tube import HyperOptArgumentParser

from griesskit import griess, lattice, minimal, positivity
from griesskit.errors import ConsistencyError, InvalidParameterError
from griesskit.scan import scan_grid
from griesskit.utils.utils import matrix_to_strings, report_dumps, report_write

log = logging.getLogger(__name__)

SUBCOMMANDS = ['kac', 'fusion', 'griess', 'spectrum', 'autos', 'positivity', 'scan', 'lattice-verify']
FORMATS = ['json', 'csv', 'text']
DEFAULT_MAX_N = 8
MAX_M = 12

REQUIRED = {
    'kac': ('m',),
    'fusion': ('m',),
    'griess': ('n', 'm'),
    'spectrum': ('n', 'm'),
    'autos': ('n',),
    'positivity': ('n', 'm_max'),
    'scan': (),
    'lattice-verify': ('n', 'm'),
}


def max_n():
    """Upper bound on n, raised by GRIESSKIT_MAX_N."""
    raw = os.environ.get('GRIESSKIT_MAX_N')
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise InvalidParameterError('GRIESSKIT_MAX_N must be an integer, got {!r}'.format(raw))
    if value < 3:
        raise InvalidParameterError('GRIESSKIT_MAX_N must be >= 3, got {}'.format(value))
    return value


@dataclass
class RunConfig:
    """One validated invocation."""

    subcommand: str
    n: Optional[int] = None
    m: Optional[int] = None
    m_max: Optional[int] = None
    output_format: str = 'json'
    weight_cap: int = lattice.DEFAULT_WEIGHT_CAP
    num_workers: int = 0
    progress: bool = False

    def validate(self, n_bound=None):
        n_bound = max_n() if n_bound is None else n_bound
        if self.subcommand not in SUBCOMMANDS:
            raise InvalidParameterError('unknown subcommand {!r}'.format(self.subcommand))
        if self.output_format not in FORMATS:
            raise InvalidParameterError('unknown format {!r}'.format(self.output_format))
        for name in ('n', 'm', 'm_max', 'weight_cap', 'num_workers'):
            value = getattr(self, name)
            if value is not None and (isinstance(value, bool) or not isinstance(value, int)):
                raise InvalidParameterError('{} must be an integer, got {!r}'.format(name, value))
        for name in REQUIRED[self.subcommand]:
            if getattr(self, name) is None:
                raise InvalidParameterError('{} needs --{}'.format(self.subcommand, name.replace('_', '-')))
        if self.n is not None and not 3 <= self.n <= n_bound:
            raise InvalidParameterError('--n must lie in [3, {}], got {}'.format(n_bound, self.n))
        for name in ('m', 'm_max'):
            value = getattr(self, name)
            if value is not None and not 1 <= value <= MAX_M:
                raise InvalidParameterError('--{} must lie in [1, {}], got {}'.format(
                    name.replace('_', '-'), MAX_M, value))
        if self.weight_cap is None or self.weight_cap < 0:
            raise InvalidParameterError('--weight-cap must be >= 0, got {}'.format(self.weight_cap))
        if self.num_workers is None or self.num_workers < 0:
            raise InvalidParameterError('--num_workers must be >= 0, got {}'.format(self.num_workers))
        if self.subcommand == 'lattice-verify' and not (
                (self.m == 1 and self.n <= 6) or (self.m == 2 and self.n == 3)):
            raise InvalidParameterError('lattice-verify supports m = 1 with n <= 6, or n = 3 with m = 2')
        return self


def _kac(config):
    m = config.m
    rows = [{'class': str(c), 'labels': [str(x) for x in c.representatives()], 'weight': h}
            for c, h in minimal.kac_table(m)]
    return 0, {'m': m, 'central_charge': minimal.central_charge(m), 'rows': rows}


def _fusion(config):
    rows = [{'a': str(a), 'b': str(b), 'c': str(c)} for a, b, c in minimal.fusion_table(config.m)]
    return 0, {'m': config.m, 'rows': rows}


def _griess(config):
    algebra = griess.build(config.n, config.m)
    rows = []
    for a, p in enumerate(algebra.pairs):
        for q in algebra.pairs[a:]:
            prod = algebra.product(algebra.basis_vector(p), algebra.basis_vector(q))
            rows.append({'left': str(p), 'right': str(q), 'product': prod.to_json(),
                         'form': algebra.form(algebra.basis_vector(p), algebra.basis_vector(q))})
    checks = {
        'commutative': algebra.is_commutative(),
        'form_invariant': algebra.form_is_invariant(),
        'conformal_acts_as_two': algebra.conformal_acts_as_two(),
    }
    report = {
        'n': algebra.n, 'm': algebra.m, 'alpha': algebra.alpha, 'beta': algebra.beta, 'dim': algebra.dim,
        'gram': matrix_to_strings(algebra.gram), 'conformal_vector': algebra.conformal_vector().to_json(),
        'central_charge_total': algebra.central_charge_total(), 'checks': checks, 'rows': rows,
        'pass': all(checks.values()),
    }
    return (0 if report['pass'] else 1), report


def _spectrum(config):
    algebra = griess.build(config.n, config.m)
    rows = []
    ok = True
    for p in algebra.pairs:
        for lam, mult in algebra.spectrum(p):
            rows.append({'pair': str(p), 'eigenvalue': lam, 'multiplicity': mult})
        ok = ok and algebra.minimal_polynomial_vanishes(p) and griess.sign_on_eigenspaces(algebra, p)
    return (0 if ok else 1), {'n': algebra.n, 'm': algebra.m, 'rows': rows, 'pass': ok}


def _autos(config):
    algebra = griess.build(config.n, config.m if config.m is not None else 1)
    order = algebra.generated_group_order(algebra.pairs, max_n=max_n())
    expected = math.factorial(algebra.n)
    sigmas = [algebra.miyamoto(p) for p in algebra.pairs]
    ok = (order == expected and all(griess.is_involution(s) for s in sigmas)
          and all(algebra.is_automorphism(s) for s in sigmas)
          and griess.miyamoto_relations(algebra)['pass'])
    return (0 if ok else 1), {'n': algebra.n, 'group_order': order, 'expected': expected, 'pass': ok}


def _positivity(config):
    rows = []
    ok = True
    for m in range(1, config.m_max + 1):
        report = positivity.gram_report(config.n, m)
        ok = ok and report.block_verdict == report.positive_definite and report.determinants_agree
        rows.append({'m': m, 'positive_definite': report.positive_definite,
                     'block_verdict': report.block_verdict, 'outside_hypothesis': report.outside_hypothesis})
    return (0 if ok else 1), {'n': config.n, 'm_max': config.m_max, 'rows': rows, 'pass': ok}


def _scan(config):
    n_top = config.n if config.n is not None else max_n()
    m_top = config.m_max if config.m_max is not None else 10
    rows = scan_grid(n_top, m_top, num_workers=config.num_workers, progress=config.progress)
    ok = all(r['pass'] for r in rows)
    return (0 if ok else 1), {'n_max': n_top, 'm_max': m_top, 'rows': rows, 'pass': ok}


def _lattice_verify(config):
    cap = lattice.WeightCap(config.weight_cap)
    if config.m == 1:
        vectors = lattice.ising_family(config.n)
    else:
        vectors = lattice.tilde_family(config.n)
    relations = lattice.verify_relations(vectors, config.m, cap)
    comparison = lattice.compare_with_abstract(vectors, griess.build(config.n, config.m), cap)
    failures = relations['failures'] + comparison['failures']
    report = {'n': config.n, 'm': config.m, 'weight_cap': config.weight_cap,
              'checked': relations['checked'] + comparison['checked'],
              'rows': relations['entries'] + comparison['entries'], 'failures': failures}
    if config.m == 1:
        commutant = lattice.commutant_check(vectors, config.n, cap)
        report['checked'] += commutant['checked']
        report['rows'] += commutant['entries']
        failures += commutant['failures']
    report['pass'] = not failures
    return (0 if not failures else 1), report


HANDLERS = {
    'kac': _kac,
    'fusion': _fusion,
    'griess': _griess,
    'spectrum': _spectrum,
    'autos': _autos,
    'positivity': _positivity,
    'scan': _scan,
    'lattice-verify': _lattice_verify,
}


def run(config):
    """Validates and executes a RunConfig.

    Args:
        config (RunConfig): The invocation.

    Returns:
        (exit code, serialized report). The report is empty on a parameter error.
    """
    config.validate()
    log.debug('running %s', config)
    try:
        code, report = HANDLERS[config.subcommand](config)
    except ConsistencyError as e:
        return 1, report_dumps({'error': str(e), 'pass': False}, config.output_format)
    return code, report_dumps(report, config.output_format)


class GriessArgumentParser(HyperOptArgumentParser):
    """Parse errors raise instead of exiting so main() owns the exit code."""

    def error(self, message):
        raise InvalidParameterError(message)


def build_parser():
    usage_str = 'usage: %(prog)s subcommand [options]'
    description_str = 'exact Griess algebra, fusion and positivity computations'

    parser = GriessArgumentParser(
        prog='griesskit',
        usage=usage_str,
        description=description_str,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        'subcommand',
        choices=SUBCOMMANDS,
        help='computation to run',
    )
    parser.add_argument(
        '--n',
        action='store',
        dest='n',
        type=int,
        help='number of indices (rank of the lattice)',
        default=None,
    )
    parser.add_argument(
        '--m',
        action='store',
        dest='m',
        type=int,
        help='minimal-model index',
        default=None,
    )
    parser.add_argument(
        '--m-max',
        action='store',
        dest='m_max',
        type=int,
        help='largest m for positivity and scan',
        default=None,
    )
    parser.add_argument(
        '--format',
        action='store',
        dest='output_format',
        type=str,
        choices=FORMATS,
        help='report format',
        default='json',
    )
    parser.add_argument(
        '--weight-cap',
        action='store',
        dest='weight_cap',
        type=int,
        help='lattice states above this weight are dropped',
        default=lattice.DEFAULT_WEIGHT_CAP,
    )
    parser.add_argument(
        '--out',
        action='store',
        dest='out',
        type=str,
        help='write the report to this file instead of standard output',
        default=None,
    )
    parser.add_argument(
        '--num_workers',
        action='store',
        type=int,
        dest='num_workers',
        help='number of worker processes for scan (0 runs in-process)',
        default=0,
    )
    parser.add_argument(
        '--no_progress',
        action='store_true',
        dest='no_progress',
        help='disable the progress bar',
        default=False,
    )
    parser.add_argument(
        '--verbose',
        action='store_true',
        dest='verbose',
        help='debug logging on standard error',
        default=False,
    )
    parser.json_config(
        '--config',
        type=str,
        help='JSON run file keyed by option dest; its values replace the parsed ones',
        default=None,
    )
    return parser


def parse_args(argv=None):
    """Parses argv; values from a --config run file replace the parsed ones.

    Raises:
        InvalidParameterError: On a parse error, an unreadable run file or a key
            that is not an option dest.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except InvalidParameterError:
        raise
    except (OSError, ValueError, AttributeError) as e:
        raise InvalidParameterError('cannot read config: {}'.format(e))
    dests = {a.dest for a in parser._actions} - {'help'}
    unknown = sorted(set(parser.parsed_args) - dests)
    if unknown:
        raise InvalidParameterError('unknown keys in config {}: {}'.format(args.config, ', '.join(unknown)))
    return args


def main(argv=None):
    """Entry point; returns the process exit code."""
    try:
        args = parse_args(argv)
    except InvalidParameterError as e:
        print('griesskit: error: {}'.format(e), file=sys.stderr)
        return 2

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(asctime)s %(name)s %(levelname)s: %(message)s',
    )
    config = RunConfig(
        subcommand=args.subcommand,
        n=args.n,
        m=args.m,
        m_max=args.m_max,
        output_format=args.output_format,
        weight_cap=args.weight_cap,
        num_workers=args.num_workers,
        progress=not args.no_progress and sys.stderr.isatty(),
    )
    try:
        code, text = run(config)
    except InvalidParameterError as e:
        print('griesskit: error: {}'.format(e), file=sys.stderr)
        return 2

    if args.out:
        report_write(args.out, text)
    else:
        sys.stdout.write(text)
    if code == 1:
        print('griesskit: verification failed', file=sys.stderr)
    return code


if __name__ == '__main__':
    sys.exit(main())
