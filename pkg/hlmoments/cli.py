#!/usr/bin/env python

"""
Command-line interface.

Exit codes: 0 on success, 1 for invalid input, 2 when adaptive truncation
does not converge, 3 when an internal consistency check fails.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import argparse
import json
import logging
import sys

from tqdm import tqdm

from . import group_oracle, hall_littlewood, macdonald
from .conv.pd import report_to_df, verify_results_to_df
from .conv.serial import diagnostics_to_json, distribution_from_json, \
    load_json, moment_table_from_json, moment_table_to_json
from .conv.utils import format_partition, format_value, parse_partition, \
    parse_partition_list
from .inversion import MultiMomentTable, NonConvergenceError, TruncationPolicy, \
    constant_moments, distribution_from_moments, invert, invert_fixed_level, \
    invert_multi, moments_from_distribution
from .partitions import EMPTY, conjugate, conjugate_interlacing_count, down_closure, \
    enumerate_conjugate_interlacing, enumerate_up_to, interval, partitions_of
from .qseries import to_rational
from .simulator import SimConfig, closed_loop_report
from .utils import DomainError

logger = logging.getLogger(__name__)

class ArgumentParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors with exit code 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, '{}: error: {}\n'.format(self.prog, message))

def _emit(text, output=None):
    if output:
        with open(output, 'w') as f:
            f.write(text + '\n')
    else:
        print(text)

def _policy(args):
    if args.mode is None:
        if args.cap is not None:
            return TruncationPolicy.capped(args.cap)
        return None
    if args.mode == 'cap':
        return TruncationPolicy.capped(args.cap)
    if args.mode == 'adaptive':
        return TruncationPolicy.adaptive(to_rational(args.tolerance), args.window,
                                         args.max_cap)
    return TruncationPolicy.exact()

def _load_moments(args):
    if args.constant_moments is not None:
        if args.p is None:
            raise DomainError('--constant-moments needs --p')
        return constant_moments(to_rational(args.constant_moments), args.p)
    if args.moments is None:
        raise DomainError('one of --moments or --constant-moments is required')
    M = moment_table_from_json(load_json(args.moments))
    if args.p is not None and getattr(M, 'p', None) != args.p:
        raise DomainError('moment file is for p = {}, not {}'.format(
            getattr(M, 'p', None), args.p))
    return M

def _print_inversion(value, diagnostics, args):
    if args.diagnostics:
        result = {'value': format_value(value),
                  'diagnostics': diagnostics_to_json(diagnostics)}
        if args.decimal is not None:
            result['decimal'] = format_value(value, args.decimal)
        _emit(json.dumps(result, indent=2))
    else:
        _emit(format_value(value, args.decimal))

def cmd_sur_count(args):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    if args.brute:
        count = group_oracle.brute_sur_count(lam, mu, args.p, args.budget)
    else:
        count = hall_littlewood.surjection_count(lam, mu, args.p)
    _emit(str(count))
    return 0

def cmd_moments(args):
    dist, p = distribution_from_json(load_json(args.distribution))
    p = args.p if args.p is not None else p
    if p is None:
        raise DomainError('the prime must be given with --p or in the distribution file')
    if args.mu is not None:
        probes = parse_partition_list(args.mu)
    elif args.max_size is not None:
        probes = enumerate_up_to(args.max_size)
    else:
        probes = down_closure(dist.support())
    M = moments_from_distribution(dist, p, probes)
    _emit(json.dumps(moment_table_to_json(M), indent=2), args.output)
    return 0

def cmd_invert(args):
    M = _load_moments(args)
    policy = _policy(args)
    if args.all:
        if args.max_size is None:
            raise DomainError('--all needs --max-size')
        dist = distribution_from_moments(M, args.max_size, policy=policy,
                                         progress=args.progress)
        lines = ['{}\t{}'.format(format_partition(nu), format_value(dist.mass(nu),
                                                                   args.decimal))
                 for nu in enumerate_up_to(args.max_size)]
        lines.append('total\t{}'.format(format_value(dist.total, args.decimal)))
        _emit('\n'.join(lines))
        return 0
    nu = parse_partition(args.nu)
    value, diagnostics = invert(M, nu, policy=policy)
    _print_inversion(value, diagnostics, args)
    return 0

def cmd_invert_fixed_level(args):
    M = _load_moments(args)
    nu = parse_partition(args.nu)
    value, diagnostics = invert_fixed_level(M, nu, d=args.d, policy=_policy(args))
    _print_inversion(value, diagnostics, args)
    return 0

def cmd_invert_multi(args):
    M = moment_table_from_json(load_json(args.moments))
    if not isinstance(M, MultiMomentTable):
        raise DomainError('invert-multi needs a moment file with "primes"')
    nus = parse_partition_list(args.nu)
    primes = json.loads(args.primes) if args.primes else None
    levels = json.loads(args.levels) if args.levels else None
    value, diagnostics = invert_multi(M, nus, primes, policy=_policy(args),
                                      levels=levels)
    _print_inversion(value, diagnostics, args)
    return 0

def _pairs(max_size):
    for lam in enumerate_up_to(max_size):
        for nu in interval(EMPTY, lam):
            yield lam, nu

def suite_hl_cancellation(args):
    t = to_rational(args.t)
    for lam, nu in _pairs(args.max_size):
        yield (lam, nu), hall_littlewood.cancellation_sum(lam, nu, t) == (lam == nu)

def suite_hl_product(args):
    t = to_rational(args.t)
    for mu, nu in _pairs(args.max_size):
        yield (nu, mu), hall_littlewood.inversion_coefficient(nu, mu, t) == \
            hall_littlewood.inversion_coefficient_product(nu, mu, t)

def suite_specs_cancel(args):
    params = macdonald.MacdonaldParams(args.q, args.t)
    u = to_rational(args.u)
    for lam, mu in _pairs(args.max_size):
        yield (lam, mu), macdonald.specs_cancel_check(lam, mu, u, params) == (lam == mu)

def suite_beta_duality(args):
    params = macdonald.MacdonaldParams(args.q, args.t)
    alphabet = [to_rational(c) for c in json.loads(args.alphabet)]
    for lam, mu in _pairs(args.max_size):
        yield (lam, mu), macdonald.beta_duality_check(lam, mu, alphabet, params)

def suite_sur_count(args):
    for lam in enumerate_up_to(args.max_size):
        for mu in enumerate_up_to(sum(lam)):
            try:
                count = group_oracle.brute_sur_count(lam, mu, args.p, args.budget)
            except group_oracle.EnumerationBudgetError as e:
                logger.warning('skipping %s: %s', (lam, mu), e)
                yield (lam, mu), None
                continue
            yield (lam, mu), count == hall_littlewood.surjection_count(lam, mu, args.p)

SUITES = {
    'hl-cancellation': suite_hl_cancellation,
    'hl-product': suite_hl_product,
    'specs-cancel': suite_specs_cancel,
    'beta-duality': suite_beta_duality,
    'sur-count': suite_sur_count,
}

def cmd_verify(args):
    names = list(SUITES) if args.suite == 'all' else [args.suite]
    results = []
    for name in names:
        passed = total = skipped = 0
        for case, ok in tqdm(SUITES[name](args), disable=not args.progress, desc=name):
            if ok is None:
                skipped += 1
                continue
            total += 1
            if ok:
                passed += 1
            else:
                logger.warning('%s failed at %s', name, case)
        logger.info('%s: passed %d/%d, skipped %d', name, passed, total, skipped)
        results.append((name, passed, total, skipped))
    if args.table:
        _emit(verify_results_to_df(results).to_string())
    else:
        for name, passed, total, skipped in results:
            line = 'passed {}/{}'.format(passed, total)
            if skipped:
                line += ', skipped {}'.format(skipped)
            _emit('{}: {}'.format(name, line) if len(results) > 1 else line)
    return 0 if all(p == n for _, p, n, _ in results) else 3

def cmd_simulate(args):
    if args.config:
        config = SimConfig.from_file(args.config)
    else:
        missing = [k for k in ('p', 'd', 'n', 'samples') if getattr(args, k) is None]
        if missing:
            raise DomainError('missing simulation flags: {}'.format(
                ', '.join('--' + k for k in missing)))
        config = SimConfig(args.p, args.d, args.n, args.samples, seed=args.seed,
                           shard_count=args.shards, workers=args.workers)
    report = closed_loop_report(config, args.probe_depth, cap=args.cap,
                                progress=args.progress)
    if args.table:
        _emit(report_to_df(report).to_string(), args.output)
    else:
        _emit(report.to_json(indent=2), args.output)
    return 0

def cmd_partitions(args):
    if args.conjugate is not None:
        _emit(format_partition(conjugate(parse_partition(args.conjugate))))
    elif args.interlacing is not None:
        if args.cap is None:
            raise DomainError('--interlacing needs --cap')
        nu = parse_partition(args.interlacing)
        if args.count:
            _emit(str(conjugate_interlacing_count(nu, args.cap)))
        else:
            for mu in enumerate_conjugate_interlacing(nu, args.cap):
                _emit(format_partition(mu))
    else:
        if args.size is not None:
            items = list(partitions_of(args.size))
        elif args.max_size is not None:
            items = enumerate_up_to(args.max_size)
        else:
            raise DomainError('one of --size, --max-size, --conjugate or '
                              '--interlacing is required')
        if args.count:
            _emit(str(len(items)))
        else:
            for lam in items:
                _emit(format_partition(lam))
    return 0

def _add_inversion_args(p, moments=True):
    if moments:
        p.add_argument('--moments', help='moment table JSON file ("-" for stdin)')
        p.add_argument('--constant-moments', help='use M_mu = VALUE for every mu')
    p.add_argument('--mode', choices=['exact', 'cap', 'adaptive'],
                   help='truncation mode')
    p.add_argument('--cap', type=int, help='first column cap')
    p.add_argument('--tolerance', default='1/1000000000000',
                   help='adaptive block tolerance')
    p.add_argument('--window', type=int, default=3,
                   help='adaptive stopping window')
    p.add_argument('--max-cap', type=int, default=60,
                   help='adaptive hard cap')
    p.add_argument('--diagnostics', action='store_true',
                   help='print value and diagnostics as JSON')
    p.add_argument('--decimal', type=int, metavar='DIGITS',
                   help='add a decimal preview with DIGITS significant digits')

def build_parser():
    parser = ArgumentParser(prog='hlmoments',
                            description='Exact moment inversion for random '
                            'finite abelian p-groups')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='-v for INFO, -vv for DEBUG logging')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('sur-count', help='number of surjections G_lambda -> G_mu')
    p.add_argument('--lambda', dest='lam', required=True, help='JSON array')
    p.add_argument('--mu', required=True, help='JSON array')
    p.add_argument('--p', type=int, required=True)
    p.add_argument('--brute', action='store_true', help='count by enumeration')
    p.add_argument('--budget', type=int, default=group_oracle.DEFAULT_BUDGET,
                   help='enumeration budget for --brute')
    p.set_defaults(func=cmd_sur_count)

    p = sub.add_parser('moments', help='moment table of a distribution')
    p.add_argument('--distribution', required=True, help='distribution JSON file')
    p.add_argument('--p', type=int)
    p.add_argument('--mu', help='JSON array of partitions to tabulate')
    p.add_argument('--max-size', type=int, help='tabulate all |mu| <= N')
    p.add_argument('--output')
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser('invert', help='Pr(G = G_nu) from moments')
    p.add_argument('--nu', default='[]', help='JSON array')
    p.add_argument('--p', type=int)
    p.add_argument('--all', action='store_true', help='invert every |nu| <= --max-size')
    p.add_argument('--max-size', type=int)
    p.add_argument('--progress', action='store_true')
    _add_inversion_args(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser('invert-fixed-level', help='Pr(G/p^d G = G_nu) from moments')
    p.add_argument('--nu', default='[]', help='JSON array')
    p.add_argument('--p', type=int)
    p.add_argument('--d', type=int, required=True)
    _add_inversion_args(p)
    p.set_defaults(func=cmd_invert_fixed_level)

    p = sub.add_parser('invert-multi', help='multi-prime inversion')
    p.add_argument('--moments', required=True, help='multi-prime moment table JSON')
    p.add_argument('--nu', required=True, help='JSON array of partitions, one per prime')
    p.add_argument('--primes', help='JSON array of primes')
    p.add_argument('--levels', help='JSON array of torsion levels')
    _add_inversion_args(p, moments=False)
    p.set_defaults(func=cmd_invert_multi)

    p = sub.add_parser('verify', help='run identity suites')
    p.add_argument('--suite', choices=list(SUITES) + ['all'], default='all')
    p.add_argument('--max-size', type=int, default=4)
    p.add_argument('--t', default='1/2')
    p.add_argument('--q', default='1/3')
    p.add_argument('--u', default='2/7')
    p.add_argument('--p', type=int, default=2)
    p.add_argument('--budget', type=int, default=group_oracle.DEFAULT_BUDGET,
                   help='enumeration budget per sur-count case')
    p.add_argument('--alphabet', default='["1/2", "1/3"]',
                   help='JSON array of rationals for beta-duality')
    p.add_argument('--table', action='store_true')
    p.add_argument('--progress', action='store_true')
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('simulate', help='closed-loop cokernel simulation')
    p.add_argument('--config', help='JSON or TOML SimConfig file')
    p.add_argument('--p', type=int)
    p.add_argument('--d', type=int)
    p.add_argument('--n', type=int)
    p.add_argument('--samples', type=int)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--shards', type=int, default=1)
    p.add_argument('--workers', type=int)
    p.add_argument('--probe-depth', type=int, default=3)
    p.add_argument('--cap', type=int)
    p.add_argument('--table', action='store_true')
    p.add_argument('--output')
    p.add_argument('--progress', action='store_true')
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser('partitions', help='partition enumeration utilities')
    p.add_argument('--size', type=int)
    p.add_argument('--max-size', type=int)
    p.add_argument('--conjugate')
    p.add_argument('--interlacing', metavar='NU',
                   help='list mu with conjugate interlacing above NU')
    p.add_argument('--cap', type=int)
    p.add_argument('--count', action='store_true')
    p.set_defaults(func=cmd_partitions)
    return parser

def run(argv=None):
    """
    Run the command line with arguments `argv` and return the exit code.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(asctime)s %(name)s %(levelname)s %(message)s')
    try:
        return args.func(args)
    except NonConvergenceError as e:
        print('error: {}'.format(e), file=sys.stderr)
        print(json.dumps({'diagnostics': diagnostics_to_json(e.diagnostics)}, indent=2))
        return 2
    except (ValueError, OSError) as e:
        print('error: {}'.format(e), file=sys.stderr)
        return 1
    except ArithmeticError as e:
        print('internal error: {}'.format(e), file=sys.stderr)
        return 3

def main():
    sys.exit(run())

if __name__ == '__main__':
    main()
