#!/usr/bin/env python

"""
Monte-Carlo cokernels of random matrices over ``Z/p^d``.

Uniform random ``n x n`` matrices are reduced to Smith form in batches; the
cokernel types are tallied into an empirical distribution whose exact
moments feed the inversion routines.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import json
import logging
import math
import os
import tomllib
import warnings
from collections import Counter, namedtuple
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np
from tqdm import tqdm

from .group_oracle import exact_moment
from .inversion import Distribution, MomentTable, TruncationPolicy, invert
from .partitions import Partition, down_closure, enumerate_up_to
from .utils import DomainError, get_workers, split_evenly, timed

logger = logging.getLogger(__name__)

DEFAULT_BLOCK_SIZE = 1024
DEFAULT_GAP_TOLERANCE = Fraction(1, 50)

# Products of two residues must fit in int64.
MAX_MODULUS = 2**31

class ShardConfigError(DomainError):
    """Shard layout is inconsistent with the sample blocks"""
    pass

class SimConfigError(DomainError):
    """Simulation configuration is invalid"""
    pass

class LargeGapWarning(UserWarning):
    """Closed-loop report has rows whose gap exceeds the tolerance"""
    pass

def _valuations(A, p, d):
    """
    p-adic valuations of residues modulo ``p^d``, with 0 given valuation `d`.
    """

    val = np.zeros(A.shape, dtype=np.int64)
    for e in range(1, d+1):
        val += (A % p**e == 0)
    return val

def _pow_mod(base, exponent, modulus):
    result = np.ones_like(base)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = result * base % modulus
        base = base * base % modulus
        exponent >>= 1
    return result

def cokernel_types(A, p, d):
    """
    Cokernel types of a stack of square matrices over ``Z/p^d``.

    Parameters
    ----------
    A : numpy.ndarray
        Integer array of shape ``(count, n, n)``; entries are reduced modulo
        ``p^d``.
    p : int
        The prime.
    d : int
        Exponent of the modulus.

    Returns
    -------
    result : list of Partition
        ``lam`` with ``coker(A) = sum_i Z/p^{lam_i}`` for each matrix.

    Notes
    -----
    Each step picks a pivot of minimal valuation in the remaining submatrix
    (lowest row-major index on ties), moves it to the diagonal, divides it by
    its unit part and clears its row and column.
    """

    A = np.array(A, dtype=np.int64)
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise DomainError('expected a stack of square matrices, got shape {}'.format(
            A.shape))
    m = p**d
    if m > MAX_MODULUS:
        raise SimConfigError('modulus p^d = {} is too large for int64 '
                             'reduction'.format(m))
    A %= m
    count, n, _ = A.shape
    rows = np.arange(count)
    exponents = np.zeros((count, n), dtype=np.int64)
    phi = p**(d-1) * (p-1)
    for k in range(n):
        size = n - k
        val = _valuations(A[:, k:, k:], p, d).reshape(count, size*size)
        idx = val.argmin(axis=1)
        v = val[rows, idx]
        r = k + idx // size
        c = k + idx % size

        tmp = A[rows, k, :].copy()
        A[rows, k, :] = A[rows, r, :]
        A[rows, r, :] = tmp
        tmp = A[rows, :, k].copy()
        A[rows, :, k] = A[rows, :, c]
        A[rows, :, c] = tmp

        pv = p**v
        unit = np.where(v < d, A[:, k, k] // pv, 1)
        inv = _pow_mod(unit, phi - 1, m)
        A[:, k, :] = A[:, k, :] * inv[:, None] % m

        f = A[:, k+1:, k] // pv[:, None]
        A[:, k+1:, :] = (A[:, k+1:, :] - f[:, :, None] * A[:, k, None, :]) % m
        g = A[:, k, k+1:] // pv[:, None]
        A[:, :, k+1:] = (A[:, :, k+1:] - A[:, :, k, None] * g[:, None, :]) % m
        exponents[:, k] = v
    return [Partition(sorted((int(e) for e in row if e), reverse=True))
            for row in exponents]

def cokernel_type(A, p, d):
    """
    Cokernel type of a single square matrix over ``Z/p^d``.

    Examples
    --------
    >>> cokernel_type([[2, 1], [1, 1]], 2, 2)
    ()
    """

    A = np.asarray(A, dtype=np.int64)
    return cokernel_types(A[None, :, :], p, d)[0]

SIM_CONFIG_KEYS = ('p', 'd', 'n', 'sample_count', 'seed', 'shard_count',
                   'block_size', 'workers', 'probe_max_size', 'gap_tolerance')

class SimConfig(object):
    """
    Parameters of a cokernel simulation.

    Parameters
    ----------
    p : int
        The prime.
    d : int
        Matrices have entries in ``Z/p^d``.
    n : int
        Matrix dimension.
    sample_count : int
        Number of matrices.
    seed : int
        Philox key.
    shard_count : int
        Number of contiguous block ranges sampled independently.
    block_size : int
        Matrices per Philox block.
    workers : int
        Worker processes; None defers to the `HLMOMENTS_WORKERS` variable.
    probe_max_size : int
        Tabulate empirical moments for all ``|mu| <= probe_max_size``;
        None tabulates the down-closure of the sampled support.
    gap_tolerance : Fraction
        Closed-loop rows with a larger gap are flagged.
    """

    def __init__(self, p, d, n, sample_count, seed=0, shard_count=1,
                 block_size=DEFAULT_BLOCK_SIZE, workers=None, probe_max_size=None,
                 gap_tolerance=DEFAULT_GAP_TOLERANCE):
        for name, value, low in (('p', p, 2), ('d', d, 1), ('n', n, 1),
                                 ('sample_count', sample_count, 1),
                                 ('shard_count', shard_count, 1),
                                 ('block_size', block_size, 1), ('seed', seed, 0)):
            if isinstance(value, bool) or not isinstance(value, int) or value < low:
                raise SimConfigError('{} must be an integer >= {}, got {!r}'.format(
                    name, low, value))
        if p**d > MAX_MODULUS:
            raise SimConfigError('modulus p^d = {} is too large'.format(p**d))
        if workers is not None and workers < 1:
            raise SimConfigError('workers must be positive, got {}'.format(workers))
        if probe_max_size is not None and probe_max_size < 0:
            raise SimConfigError('probe_max_size must be nonnegative')
        self.p = p
        self.d = d
        self.n = n
        self.sample_count = sample_count
        self.seed = seed
        self.shard_count = shard_count
        self.block_size = block_size
        self.workers = workers
        self.probe_max_size = probe_max_size
        self.gap_tolerance = Fraction(gap_tolerance)

    @property
    def modulus(self):
        return self.p**self.d

    @property
    def block_count(self):
        return -(-self.sample_count // self.block_size)

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - set(SIM_CONFIG_KEYS)
        if unknown:
            raise SimConfigError('unknown configuration keys: {}'.format(
                ', '.join(sorted(unknown))))
        data = dict(data)
        if isinstance(data.get('gap_tolerance'), str):
            data['gap_tolerance'] = Fraction(data['gap_tolerance'])
        try:
            return cls(**data)
        except TypeError as e:
            raise SimConfigError(str(e))

    @classmethod
    def from_file(cls, path):
        """
        Load a configuration from a ``.json`` or ``.toml`` file.
        """

        ext = os.path.splitext(path)[1].lower()
        if ext == '.json':
            with open(path) as f:
                data = json.load(f)
        elif ext == '.toml':
            with open(path, 'rb') as f:
                data = tomllib.load(f)
        else:
            raise SimConfigError('unsupported configuration format {!r}'.format(ext))
        return cls.from_dict(data)

    def to_dict(self):
        data = {k: getattr(self, k) for k in SIM_CONFIG_KEYS}
        data['gap_tolerance'] = str(self.gap_tolerance)
        return data

    def __eq__(self, other):
        return isinstance(other, SimConfig) and self.to_dict() == other.to_dict()

    def __repr__(self):
        return 'SimConfig({})'.format(', '.join(
            '{}={!r}'.format(k, v) for k, v in self.to_dict().items()))

def block_generator(seed, block):
    """
    Philox generator for one block of samples.

    The block index occupies the second counter word, so every block reads a
    disjoint stretch of the stream for the same key.
    """

    return np.random.Generator(np.random.Philox(key=seed, counter=[0, block, 0, 0]))

def uniform_sampler(rng, count, n, modulus):
    return rng.integers(0, modulus, size=(count, n, n), dtype=np.int64)

def _run_shard(p, d, n, seed, sample_count, block_size, blocks, sampler=None,
               progress=False):
    """
    Tally of cokernel types over a contiguous range of blocks.
    """

    sampler = sampler or uniform_sampler
    tally = Counter()
    for b in tqdm(blocks, disable=not progress, desc='blocks'):
        count = min(block_size, sample_count - b*block_size)
        A = sampler(block_generator(seed, b), count, n, p**d)
        for lam in cokernel_types(A, p, d):
            tally[tuple(lam)] += 1
    return tally

@timed
def sample_types(config, sampler=None, progress=False):
    """
    Cokernel type counts of `config.sample_count` random matrices.

    Parameters
    ----------
    config : SimConfig
        Simulation parameters.
    sampler : callable
        ``sampler(rng, count, n, modulus)`` returning an integer array of shape
        ``(count, n, n)``; defaults to uniform entries.
    progress : bool
        Show tqdm progress bars.

    Returns
    -------
    result : collections.Counter
        Maps partitions to counts. Identical for every shard count and
        worker count.
    """

    if config.shard_count > config.block_count:
        raise ShardConfigError('{} shards for {} blocks of {} samples'.format(
            config.shard_count, config.block_count, config.block_size))
    shards = split_evenly(config.block_count, config.shard_count)
    args = (config.p, config.d, config.n, config.seed, config.sample_count,
            config.block_size)
    workers = get_workers(config.workers or 1)
    if workers > 1 and sampler is None:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            tallies = list(executor.map(_run_shard, *zip(*[args + (s,) for s in shards])))
    else:
        tallies = [_run_shard(*args, s, sampler, progress) for s in shards]
    result = Counter()
    for i, tally in enumerate(tallies):
        logger.debug('shard %d: %d samples', i, sum(tally.values()))
        result.update(tally)
    assert sum(result.values()) == config.sample_count
    return Counter({Partition(k): v for k, v in result.items()})

def sample_empirical(config, sampler=None, progress=False):
    """
    Empirical distribution and moments of random cokernels.

    Returns
    -------
    dist : Distribution
        Frequencies ``k/N``.
    moments : MomentTable
        Exact moments of `dist` on the probe set; further moments are
        computed on demand.
    """

    tally = sample_types(config, sampler=sampler, progress=progress)
    dist = Distribution({lam: Fraction(k, config.sample_count)
                         for lam, k in tally.items()})
    if config.probe_max_size is None:
        probes = down_closure(dist.support())
    else:
        probes = enumerate_up_to(config.probe_max_size)
    entries = {mu: exact_moment(dist, mu, config.p) for mu in probes}
    moments = MomentTable(config.p, entries,
                          provider=lambda mu: exact_moment(dist, mu, config.p),
                          support=dist)
    return dist, moments

ReportRow = namedtuple('ReportRow', ['nu', 'frequency', 'estimate', 'gap', 'stderr',
                                     'flagged', 'partial_sums'])

class ClosedLoopReport(object):
    """
    Empirical frequencies side by side with estimates inverted from moments.
    """

    def __init__(self, config, rows, cap):
        self.config = config
        self.rows = rows
        self.cap = cap

    @property
    def max_gap(self):
        return max((row.gap for row in self.rows), default=Fraction(0))

    @property
    def flagged(self):
        return [row.nu for row in self.rows if row.flagged]

    def to_frame(self):
        from .conv.pd import report_to_df
        return report_to_df(self)

    def to_json(self, **kwargs):
        from .conv.serial import report_to_json
        return json.dumps(report_to_json(self), **kwargs)

def closed_loop_report(config, probe_depth, cap=None, sampler=None, progress=False):
    """
    Invert empirical moments and compare with empirical frequencies.

    Parameters
    ----------
    config : SimConfig
        Simulation parameters.
    probe_depth : int
        Report every type of size at most `probe_depth`.
    cap : int
        First column cap for the inversion; defaults to ``config.n``, the
        largest number of parts a cokernel can have.
    sampler : callable
        Replaces uniform matrix entries.

    Returns
    -------
    result : ClosedLoopReport
    """

    dist, moments = sample_empirical(config, sampler=sampler, progress=progress)
    cap = config.n if cap is None else cap
    policy = TruncationPolicy.capped(cap)
    N = config.sample_count
    rows = []
    for nu in enumerate_up_to(probe_depth):
        freq = dist.mass(nu)
        if cap < nu.conjugate()[0]:
            continue
        estimate, diagnostics = invert(moments, nu, policy=policy)
        gap = abs(estimate - freq)
        stderr = math.sqrt(float(freq) * (1 - float(freq)) / N)
        rows.append(ReportRow(nu, freq, estimate, gap, stderr,
                              gap > config.gap_tolerance, diagnostics.partial_sums))
    report = ClosedLoopReport(config, rows, cap)
    if report.flagged:
        warnings.warn('gaps above {} at {}'.format(config.gap_tolerance, report.flagged),
                      category=LargeGapWarning)
    logger.info('closed loop: %d rows, max gap %s', len(rows), float(report.max_gap))
    return report
