#!/usr/bin/env python

"""
Moments of random finite abelian p-groups and their inversion.

The forward map sends a distribution on group types to its surjection
moments ``M_mu = E[#Sur(G, G_mu)]``. The inverse map recovers
``Pr(G = G_nu)`` as a signed sum of moments over the partitions `mu` whose
conjugate interlaces above the conjugate of `nu`. That domain is infinite only
in the first column ``mu'_1``, so every inversion is computed column block by
column block under a `TruncationPolicy`.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import itertools
import logging
import numbers
import warnings
from collections import namedtuple
from fractions import Fraction
from math import prod

from tqdm import tqdm

from .group_oracle import exact_moment
from .hall_littlewood import inversion_coefficient, surjection_count
from .partitions import as_partition, conjugate, conjugate_interlacing_blocks, \
    contains, enumerate_up_to, graded_key
from .qseries import to_rational
from .utils import DomainError, timed

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = Fraction(1, 10**12)
DEFAULT_WINDOW = 3
DEFAULT_MAX_CAP = 60

MODES = ('exact', 'cap', 'adaptive')

class MissingMomentError(DomainError):
    """Moment table has no value for a moment the inversion needs"""
    pass

class InvalidDistributionError(DomainError):
    """Masses or moments are not those of a (sub-)probability distribution"""
    pass

class NonConvergenceError(ArithmeticError):
    """Adaptive truncation did not meet its stopping rule below the hard cap"""

    def __init__(self, message, diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics

class DuplicatePrimeError(DomainError):
    """The same prime appears twice in a multi-prime inversion"""
    pass

class LevelError(DomainError):
    """Target partition has more columns than the torsion level allows"""
    pass

class SubProbabilityWarning(UserWarning):
    """Inverted masses fall outside [0, 1] or do not sum to 1"""
    pass

class HeuristicTruncationWarning(UserWarning):
    """Adaptive truncation answer rests on a heuristic stopping rule"""
    pass

Diagnostics = namedtuple('Diagnostics', ['mode', 'cap', 'partial_sums', 'last_block',
                                         'term_count', 'converged', 'heuristic'])

def _check_prime(p):
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        raise DomainError('p must be an integer >= 2, got {!r}'.format(p))
    return p

class Distribution(object):
    """
    Finitely supported distribution on isomorphism types.

    Parameters
    ----------
    entries : dict
        Maps partitions (or tuples of partitions for several primes) to
        masses.
    validate : bool
        If True, reject masses outside [0, 1] and totals above 1. Estimates
        obtained by truncated inversion are stored with ``validate=False``.
    """

    def __init__(self, entries, validate=True):
        self.entries = {}
        for key, mass in dict(entries).items():
            mass = to_rational(mass)
            if mass != 0:
                self.entries[_as_key(key)] = mass
        if validate:
            for key, mass in self.entries.items():
                if not 0 <= mass <= 1:
                    raise InvalidDistributionError('mass {} at {} is outside '
                                                   '[0, 1]'.format(mass, key))
            if self.total > 1:
                raise InvalidDistributionError('total mass {} exceeds 1'.format(self.total))

    @property
    def total(self):
        return sum(self.entries.values(), Fraction(0))

    @property
    def subprobability(self):
        return self.total < 1

    def support(self):
        return sorted(self.entries, key=_sort_key)

    def mass(self, key):
        return self.entries.get(_as_key(key), Fraction(0))

    def items(self):
        return self.entries.items()

    def __eq__(self, other):
        return isinstance(other, Distribution) and self.entries == other.entries

    def __repr__(self):
        return 'Distribution({})'.format(
            {tuple(k): str(v) for k, v in sorted(self.entries.items(),
                                                 key=lambda kv: _sort_key(kv[0]))})

def _as_key(key):
    key = tuple(key)
    if key and not any(isinstance(x, numbers.Integral) for x in key):
        return tuple(as_partition(x) for x in key)
    return as_partition(key)

def _sort_key(key):
    if key and isinstance(key[0], tuple):
        return tuple(graded_key(x) for x in key)
    return graded_key(key)

def _as_distribution(dist):
    if isinstance(dist, Distribution):
        return dist
    if not hasattr(dist, 'items'):
        raise InvalidDistributionError('distribution must be a finite mapping '
                                       'of types to masses, got {!r}'.format(dist))
    return Distribution(dist)

def _zero_columns(items):
    """
    Lengths `k` of the tabulated zero moments at ``(1^k)``.
    """

    return [len(mu) for mu, v in items if v == 0 and all(x == 1 for x in mu)]

class MomentTable(object):
    """
    Surjection moments ``M_mu`` at a single prime.

    Parameters
    ----------
    p : int
        The prime.
    entries : dict
        Maps partitions to nonnegative rational moments.
    provider : callable
        Computes ``M_mu`` for partitions missing from `entries`.
    support : Distribution
        Distribution the moments came from, if known; its support bounds the
        exact summation domain.
    """

    def __init__(self, p, entries=None, provider=None, support=None):
        self.p = _check_prime(p)
        self.entries = {}
        for mu, value in (entries or {}).items():
            value = to_rational(value)
            if value < 0:
                raise InvalidDistributionError('negative moment {} at {}'.format(value, mu))
            self.entries[as_partition(mu)] = value
        self.provider = provider
        self.support = support

    def get(self, mu, exact=False):
        """
        Moment ``M_mu``.

        Parameters
        ----------
        mu : Partition
            Moment index.
        exact : bool
            Return 0 for moments absent from the entries and the provider
            when a tabulated zero moment forces them to vanish.
        """

        mu = as_partition(mu)
        if mu in self.entries:
            return self.entries[mu]
        if self.provider is not None:
            value = to_rational(self.provider(mu))
            self.entries[mu] = value
            return value
        if exact and self.forced_zero(mu):
            return Fraction(0)
        raise MissingMomentError('no moment for mu = {} at p = {}'.format(mu, self.p))

    def forced_zero(self, mu):
        """
        True if some tabulated ``M_z = 0`` with `z` inside `mu` forces ``M_mu = 0``.

        ``M_z = 0`` means no type in the support contains `z`, so no type
        surjects onto any `mu` containing `z`.
        """

        mu = as_partition(mu)
        return any(v == 0 and contains(z, mu) for z, v in self.entries.items())

    def default_policy(self):
        """
        Exact mode for finite tables and tables of a known distribution.
        """

        if self.provider is None or self.support is not None:
            return TruncationPolicy.exact()
        raise DomainError('a truncation policy is required for provider-backed '
                          'moment tables')

    def exact_cap(self, nu):
        """
        Largest first column needed for an exact inversion at `nu`.

        With a known distribution this is the longest type in its support.
        Otherwise a tabulated ``M_(1^k) = 0`` bounds the length of every
        type in the support by ``k - 1``.

        Raises
        ------
        MissingMomentError
            If neither bound is available.
        """

        if self.support is not None:
            lengths = [len(lam) for lam in self.support.entries]
            return max([conjugate(nu)[0]] + lengths)
        columns = _zero_columns(self.entries.items())
        if not columns:
            raise MissingMomentError('exact mode at p = {} needs the source '
                                     'distribution or a zero moment at some '
                                     '(1, ..., 1); use a cap policy'.format(self.p))
        return max(conjugate(nu)[0], min(columns) - 1)

    def items(self):
        return self.entries.items()

    def __repr__(self):
        return 'MomentTable(p={}, {} entries{})'.format(
            self.p, len(self.entries), ', provider' if self.provider else '')

class TruncationPolicy(object):
    """
    How far the inversion sum is carried.

    Parameters
    ----------
    mode : str
        'exact' sums the finite domain on which the moments of a finitely
        supported distribution can be nonzero; 'cap' stops at
        ``mu'_1 = cap``; 'adaptive' raises the cap until `window`
        consecutive column blocks each contribute less than `tolerance` in
        absolute value, giving up at `max_cap`.
    cap : int
        First column cap for 'cap' mode.
    tolerance : Fraction
        Block magnitude threshold for 'adaptive' mode.
    window : int
        Number of consecutive small blocks required in 'adaptive' mode.
    max_cap : int
        Hard cap for 'adaptive' mode.
    report_partial_sums : bool
        Keep the partial sum after every column block in the diagnostics.
    """

    def __init__(self, mode='exact', cap=None, tolerance=DEFAULT_TOLERANCE,
                 window=DEFAULT_WINDOW, max_cap=DEFAULT_MAX_CAP,
                 report_partial_sums=True):
        if mode not in MODES:
            raise DomainError('unknown truncation mode {!r}'.format(mode))
        if mode == 'cap' and (cap is None or cap < 0):
            raise DomainError('cap mode needs a nonnegative cap, got {!r}'.format(cap))
        tolerance = Fraction(tolerance)
        if tolerance <= 0:
            raise DomainError('tolerance must be positive, got {}'.format(tolerance))
        if window < 1:
            raise DomainError('window must be positive, got {}'.format(window))
        self.mode = mode
        self.cap = cap
        self.tolerance = tolerance
        self.window = window
        self.max_cap = max_cap
        self.report_partial_sums = report_partial_sums

    @classmethod
    def exact(cls):
        return cls('exact')

    @classmethod
    def capped(cls, cap, report_partial_sums=True):
        return cls('cap', cap=cap, report_partial_sums=report_partial_sums)

    @classmethod
    def adaptive(cls, tolerance=DEFAULT_TOLERANCE, window=DEFAULT_WINDOW,
                 max_cap=DEFAULT_MAX_CAP):
        return cls('adaptive', tolerance=tolerance, window=window, max_cap=max_cap)

    def __repr__(self):
        if self.mode == 'cap':
            return 'TruncationPolicy(cap={})'.format(self.cap)
        if self.mode == 'adaptive':
            return 'TruncationPolicy(adaptive, tolerance={}, window={}, ' \
                'max_cap={})'.format(self.tolerance, self.window, self.max_cap)
        return 'TruncationPolicy(exact)'

def constant_moments(value, p):
    """
    Moment table with ``M_mu = value`` for every `mu`.

    ``value = 1`` gives the moments of the Cohen-Lenstra distribution.
    """

    value = to_rational(value)
    return MomentTable(p, {}, provider=lambda mu: value)

def moments_from_distribution(dist, p, mu_list):
    """
    Exact moments of a finitely supported distribution.

    Parameters
    ----------
    dist : Distribution or dict
        Maps partitions to masses.
    p : int
        The prime.
    mu_list : list of Partition
        Moments to tabulate.

    Returns
    -------
    result : MomentTable
        Table with the requested entries. Further moments are computed on
        demand from the distribution.
    """

    dist = _as_distribution(dist)
    _check_prime(p)
    entries = {as_partition(mu): exact_moment(dist, mu, p) for mu in mu_list}
    return MomentTable(p, entries, provider=lambda mu: exact_moment(dist, mu, p),
                       support=dist)

def _warn_range(value, nu):
    if value < 0 or value > 1:
        warnings.warn('inverted mass {} at {} lies outside [0, 1]'.format(value, nu),
                      category=SubProbabilityWarning)

def _invert_blocks(M, nu, policy, max_columns=None):
    """
    Sum of coefficient times moment over column blocks, per `policy`.
    """

    t = Fraction(1, M.p)
    exact = policy.mode == 'exact'
    if exact:
        if M.provider is not None and M.support is None:
            raise DomainError('exact mode needs a finite table or a table of '
                              'a known distribution')
        cap = M.exact_cap(nu)
    elif policy.mode == 'cap':
        cap = policy.cap
    else:
        cap = policy.max_cap
    partial_sums = []
    total = Fraction(0)
    block = Fraction(0)
    term_count = 0
    small = 0
    last_cap = None
    converged = policy.mode != 'adaptive'
    for m, mus in conjugate_interlacing_blocks(nu, cap, max_columns=max_columns):
        block = Fraction(0)
        for mu in mus:
            c = inversion_coefficient(nu, mu, t)
            if c:
                block += c * M.get(mu, exact=exact)
            term_count += 1
        total += block
        last_cap = m
        if policy.report_partial_sums:
            partial_sums.append(total)
        if policy.mode == 'adaptive':
            small = small + 1 if abs(block) < policy.tolerance else 0
            if small >= policy.window:
                converged = True
                break
    diagnostics = Diagnostics(policy.mode, last_cap, partial_sums, block,
                              term_count, converged, policy.mode == 'adaptive')
    if not converged:
        raise NonConvergenceError('adaptive truncation for nu = {} did not '
                                  'settle below {} by first column {}'.format(
                                      nu, policy.tolerance, policy.max_cap),
                                  diagnostics)
    if policy.mode == 'adaptive':
        warnings.warn('adaptive truncation at first column {} for nu = {} is '
                      'heuristic'.format(last_cap, nu),
                      category=HeuristicTruncationWarning)
    logger.debug('inverted nu = %s at p = %d: mode %s, cap %s, %d terms',
                 nu, M.p, policy.mode, last_cap, term_count)
    return total, diagnostics

def invert(M, nu, p=None, policy=None):
    """
    ``Pr(G = G_nu)`` from the moments of `G`.

    Parameters
    ----------
    M : MomentTable
        Moments at the prime `p`.
    nu : Partition
        Target type.
    p : int
        The prime; defaults to ``M.p`` and must agree with it.
    policy : TruncationPolicy
        Defaults to exact mode for finite tables and tables of a known
        distribution.

    Returns
    -------
    value : fractions.Fraction
        The (possibly truncated) inversion sum.
    diagnostics : Diagnostics
        Mode, final cap, partial sums per column block, last block, number of
        terms, convergence and heuristic flags.

    Examples
    --------
    >>> M = MomentTable(3, {(): 1, (1,): 1, (1, 1): 0})
    >>> invert(M, ())[0]
    Fraction(1, 2)
    """

    nu = as_partition(nu)
    if p is not None and p != M.p:
        raise DomainError('moment table is for p = {}, not {}'.format(M.p, p))
    if policy is None:
        policy = M.default_policy()
    value, diagnostics = _invert_blocks(M, nu, policy)
    _warn_range(value, nu)
    return value, diagnostics

def invert_fixed_level(M, nu, p=None, d=1, policy=None):
    """
    ``Pr(G / p^d G = G_nu)`` from the moments of `G`.

    Only `mu` with at most `d` columns enter the sum.

    Raises
    ------
    LevelError
        If `nu` has more than `d` columns.
    """

    nu = as_partition(nu)
    if d < 1:
        raise LevelError('torsion level must be positive, got {}'.format(d))
    if nu[0] > d:
        raise LevelError('{} is not the type of a p^{}-torsion group'.format(nu, d))
    if p is not None and p != M.p:
        raise DomainError('moment table is for p = {}, not {}'.format(M.p, p))
    if policy is None:
        policy = M.default_policy()
    value, diagnostics = _invert_blocks(M, nu, policy, max_columns=d)
    _warn_range(value, nu)
    return value, diagnostics

class MultiMomentTable(object):
    """
    Moments ``M_(mu(1), ..., mu(k))`` over a set of primes.

    Parameters
    ----------
    primes : list of int
        Distinct primes.
    entries : dict
        Dense form: maps tuples of partitions to moments.
    factors : list of MomentTable
        Tensor form: one table per prime, moments multiply across primes.
    provider : callable
        Computes dense moments missing from `entries`.
    support : Distribution
        Distribution over tuples of partitions the moments came from.
    """

    def __init__(self, primes, entries=None, factors=None, provider=None,
                 support=None):
        primes = [_check_prime(p) for p in primes]
        if len(set(primes)) != len(primes):
            raise DuplicatePrimeError('primes must be distinct, got {}'.format(primes))
        if factors is not None:
            if [f.p for f in factors] != primes:
                raise DomainError('factor tables do not match primes {}'.format(primes))
        self.primes = primes
        self.factors = factors
        self.entries = {tuple(as_partition(m) for m in key): to_rational(v)
                        for key, v in (entries or {}).items()}
        self.provider = provider
        self.support = support

    def get(self, mus, exact=False):
        mus = tuple(as_partition(m) for m in mus)
        if self.factors is not None:
            return prod((f.get(m, exact) for f, m in zip(self.factors, mus)),
                        start=Fraction(1))
        if mus in self.entries:
            return self.entries[mus]
        if self.provider is not None:
            value = to_rational(self.provider(mus))
            self.entries[mus] = value
            return value
        if exact and self.forced_zero(mus):
            return Fraction(0)
        raise MissingMomentError('no moment for {} at primes {}'.format(mus, self.primes))

    def forced_zero(self, mus):
        mus = tuple(as_partition(m) for m in mus)
        return any(v == 0 and all(contains(z, m) for z, m in zip(key, mus))
                   for key, v in self.entries.items())

    def exact_caps(self, nus):
        caps = []
        for i, nu in enumerate(nus):
            if self.support is not None:
                lengths = [len(key[i]) for key in self.support.entries]
                caps.append(max([conjugate(nu)[0]] + lengths))
                continue
            columns = _zero_columns((key[i], v) for key, v in self.entries.items()
                                    if not any(key[:i] + key[i+1:]))
            if not columns:
                raise MissingMomentError('exact mode at p = {} needs the source '
                                         'distribution or a zero moment at some '
                                         '(1, ..., 1)'.format(self.primes[i]))
            caps.append(max(conjugate(nu)[0], min(columns) - 1))
        return caps

def tensor_moments(tables):
    """
    Multi-prime table whose moments are products of single-prime moments.
    """

    return MultiMomentTable([M.p for M in tables], factors=list(tables))

def _multi_exact_moment(dist, mus, primes):
    total = Fraction(0)
    for nus, mass in dist.items():
        term = mass
        for nu, mu, p in zip(nus, mus, primes):
            term *= surjection_count(nu, mu, p)
            if not term:
                break
        total += term
    return total

def moments_from_multi_distribution(dist, primes, mu_tuples):
    """
    Exact moments of a finitely supported distribution over several primes.

    Parameters
    ----------
    dist : Distribution or dict
        Maps tuples of partitions, one per prime, to masses.
    primes : list of int
        Distinct primes.
    mu_tuples : list of tuple of Partition
        Moments to tabulate.

    Returns
    -------
    result : MultiMomentTable
        Dense table; ``#Sur`` factorizes over the primes.
    """

    dist = _as_distribution(dist)
    entries = {tuple(as_partition(m) for m in mus):
               _multi_exact_moment(dist, mus, primes) for mus in mu_tuples}
    return MultiMomentTable(primes, entries,
                            provider=lambda mus: _multi_exact_moment(dist, mus, primes),
                            support=dist)

def invert_multi(M, nus, primes=None, policy=None, levels=None):
    """
    ``Pr(G = G_(nu(1), ..., nu(k)))`` over a set of primes.

    Parameters
    ----------
    M : MultiMomentTable
        Dense or tensor-form moments.
    nus : list of Partition
        One target partition per prime.
    primes : list of int
        Defaults to ``M.primes`` and must agree with it.
    policy : TruncationPolicy
        Applied per prime in tensor form; dense tables support 'exact' and
        'cap' modes only.
    levels : list of int
        Optional torsion levels ``d_i``; the result is then
        ``Pr(G / (p_1^{d_1} ... p_k^{d_k}) G = G_(nu(1), ..., nu(k)))``.

    Returns
    -------
    value : fractions.Fraction
    diagnostics : Diagnostics
        With a tuple of per-prime caps.
    """

    if primes is None:
        primes = M.primes
    primes = list(primes)
    if len(set(primes)) != len(primes):
        raise DuplicatePrimeError('primes must be distinct, got {}'.format(primes))
    if primes != M.primes:
        raise DomainError('moment table is for primes {}, not {}'.format(M.primes, primes))
    nus = [as_partition(nu) for nu in nus]
    if len(nus) != len(primes):
        raise DomainError('need one partition per prime, got {} for {}'.format(
            len(nus), primes))
    if levels is not None:
        if len(levels) != len(primes):
            raise LevelError('need one torsion level per prime')
        for nu, d in zip(nus, levels):
            if d < 1 or nu[0] > d:
                raise LevelError('{} is not the type of a p^{}-torsion group'.format(nu, d))
    else:
        levels = [None]*len(primes)

    if M.factors is not None:
        value = Fraction(1)
        parts = []
        for factor, nu, d in zip(M.factors, nus, levels):
            factor_policy = policy if policy is not None else factor.default_policy()
            v, diag = _invert_blocks(factor, nu, factor_policy, max_columns=d)
            value *= v
            parts.append(diag)
        diagnostics = Diagnostics(parts[0].mode if parts else 'exact',
                                  tuple(d.cap for d in parts), [value],
                                  None, sum(d.term_count for d in parts),
                                  all(d.converged for d in parts),
                                  any(d.heuristic for d in parts))
        _warn_range(value, nus)
        return value, diagnostics

    if policy is None:
        if M.provider is not None and M.support is None:
            raise DomainError('a truncation policy is required for provider-backed '
                              'moment tables')
        policy = TruncationPolicy.exact()
    if policy.mode == 'adaptive':
        raise DomainError('adaptive truncation needs a tensor-form moment table')
    exact = policy.mode == 'exact'
    caps = M.exact_caps(nus) if exact else [policy.cap]*len(nus)
    domains = []
    for nu, cap, d, p in zip(nus, caps, levels, primes):
        t = Fraction(1, p)
        domain = []
        for _, block in conjugate_interlacing_blocks(nu, cap, max_columns=d):
            for mu in block:
                c = inversion_coefficient(nu, mu, t)
                if c:
                    domain.append((mu, c))
        domains.append(domain)
    value = Fraction(0)
    term_count = 0
    for combo in itertools.product(*domains):
        coeff = prod((c for _, c in combo), start=Fraction(1))
        value += coeff * M.get([mu for mu, _ in combo], exact=exact)
        term_count += 1
    _warn_range(value, nus)
    return value, Diagnostics(policy.mode, tuple(caps), [value], None,
                              term_count, True, False)

@timed
def distribution_from_moments(M, max_size, policy=None, progress=False):
    """
    Invert every type of size at most `max_size`.

    Parameters
    ----------
    M : MomentTable
        Moments at a single prime.
    max_size : int
        Largest ``|nu|`` inverted.
    policy : TruncationPolicy
        Passed to `invert`.
    progress : bool
        Show a tqdm progress bar.

    Returns
    -------
    result : Distribution
        Unvalidated estimates; ``result.diagnostics`` maps each `nu` to its
        diagnostics.
    """

    nus = enumerate_up_to(max_size)
    estimates = {}
    diagnostics = {}
    with warnings.catch_warnings():
        warnings.simplefilter('ignore', SubProbabilityWarning)
        for nu in tqdm(nus, disable=not progress, desc='invert'):
            estimates[nu], diagnostics[nu] = invert(M, nu, policy=policy)
    negative = [nu for nu, v in estimates.items() if v < 0]
    if negative:
        warnings.warn('negative estimates at {}'.format(negative),
                      category=SubProbabilityWarning)
    result = Distribution(estimates, validate=False)
    if result.total < 1:
        logger.info('inverted masses up to size %d sum to %s', max_size, result.total)
    result.diagnostics = diagnostics
    return result
