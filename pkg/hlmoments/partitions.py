#!/usr/bin/env python

"""
Integer partitions.

A partition is stored as a tuple of positive parts in weakly decreasing
order. Indexing past the last stored part returns 0, so a `Partition` behaves
like the eventually-zero sequence it stands for.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import itertools
import numbers
from functools import lru_cache
from math import comb, prod

from .utils import DomainError, _iterable

class InvalidPartitionError(DomainError):
    """Sequence is not a weakly decreasing sequence of nonnegative integers"""
    pass

class EmptyDomainError(DomainError):
    """Requested enumeration domain is empty by construction"""
    pass

class Partition(tuple):
    """
    Integer partition.

    Parameters
    ----------
    parts : iterable of int
        Weakly decreasing nonnegative integers. Trailing zeros are dropped.

    Examples
    --------
    >>> lam = Partition([5, 2, 2, 1, 0])
    >>> lam
    (5, 2, 2, 1)
    >>> lam[7]
    0
    >>> lam.conjugate()
    (4, 3, 1, 1, 1)
    """

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        if not _iterable(parts) or isinstance(parts, str):
            raise InvalidPartitionError('partition must be a sequence of '
                                        'integers, got {!r}'.format(parts))
        parts = list(parts)
        for x in parts:
            if not isinstance(x, numbers.Integral) or isinstance(x, bool) or x < 0:
                raise InvalidPartitionError('partition parts must be nonnegative '
                                            'integers, got {!r}'.format(parts))
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise InvalidPartitionError('partition parts must be weakly '
                                            'decreasing, got {!r}'.format(parts))
        while parts and parts[-1] == 0:
            parts.pop()
        return super().__new__(cls, (int(x) for x in parts))

    def __getitem__(self, i):
        if isinstance(i, slice):
            return tuple.__getitem__(self, i)
        if i >= len(self):
            return 0
        return tuple.__getitem__(self, i)

    def part(self, i):
        """
        1-indexed part lookup; ``part(i)`` is 0 for ``i > len(self)``.
        """

        if i < 1:
            raise IndexError('parts are 1-indexed')
        return self[i-1]

    def size(self):
        return sum(self)

    def length(self):
        return len(self)

    def conjugate(self):
        return conjugate(self)

    def n_stat(self):
        return n_stat(self)

    def multiplicity(self, i):
        return multiplicity(self, i)

EMPTY = Partition()

def as_partition(x):
    """
    Coerce a sequence to a `Partition`.
    """

    return x if isinstance(x, Partition) else Partition(x)

@lru_cache(maxsize=4096)
def _conjugate(parts):
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x >= i)
                 for i in range(1, parts[0]+1))

def conjugate(lam):
    """
    Conjugate partition.

    Parameters
    ----------
    lam : Partition
        Partition to reflect.

    Returns
    -------
    result : Partition
        Partition whose i-th part is the number of parts of `lam` that are
        at least i.
    """

    lam = as_partition(lam)
    return Partition(_conjugate(tuple(lam)))

def size(lam):
    """
    Sum of parts.
    """

    return sum(as_partition(lam))

def length(lam):
    """
    Number of nonzero parts.
    """

    return len(as_partition(lam))

def multiplicity(lam, i):
    """
    Number of parts of `lam` equal to `i` (``i >= 1``).
    """

    if i < 1:
        raise DomainError('multiplicity is defined for i >= 1, got {}'.format(i))
    return sum(1 for x in as_partition(lam) if x == i)

def multiplicities(lam):
    """
    Multiplicities ``m_1(lam), ..., m_{lam_1}(lam)``.
    """

    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(multiplicity(lam, i) for i in range(1, lam[0]+1))

def n_stat(lam):
    """
    Weighted size ``n(lam) = sum_i (i-1) lam_i``.
    """

    return sum(i*x for i, x in enumerate(as_partition(lam)))

def n_stat_conjugate_form(lam):
    """
    ``n(lam)`` computed as ``sum_i C(lam'_i, 2)``.
    """

    return sum(comb(c, 2) for c in conjugate(lam))

def interlaces(mu, lam):
    """
    True if ``lam_1 >= mu_1 >= lam_2 >= mu_2 >= ...``.
    """

    mu = as_partition(mu)
    lam = as_partition(lam)
    n = max(len(mu), len(lam))
    return all(lam[i] >= mu[i] >= lam[i+1] for i in range(n))

def contains(mu, lam):
    """
    True if the diagram of `mu` fits inside that of `lam`.
    """

    mu = as_partition(mu)
    lam = as_partition(lam)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))

def partitions_of(n, max_part=None):
    """
    Partitions of `n` in lexicographically descending order.

    Parameters
    ----------
    n : int
        Size of the generated partitions.
    max_part : int
        Upper bound on the parts; unbounded if None.

    Returns
    -------
    result : iterator of Partition
    """

    if n < 0:
        raise DomainError('cannot partition a negative integer')
    if max_part is None:
        max_part = n
    def rec(n, m):
        if n == 0:
            yield ()
            return
        for x in range(min(n, m), 0, -1):
            for rest in rec(n-x, x):
                yield (x,) + rest
    for parts in rec(n, max_part):
        yield Partition(parts)

def enumerate_up_to(max_size):
    """
    All partitions of size at most `max_size`.

    The order is graded by size, then lexicographically descending within
    each size, e.g. ``[(), (1,), (2,), (1, 1)]`` for ``max_size=2``.
    """

    if max_size < 0:
        raise DomainError('max_size must be nonnegative, got {}'.format(max_size))
    return [lam for n in range(max_size+1) for lam in partitions_of(n)]

def graded_key(lam):
    """
    Sort key for the graded, descending-lex enumeration order.
    """

    lam = as_partition(lam)
    return (sum(lam), tuple(-x for x in lam))

def interval(nu, lam):
    """
    All `mu` with ``nu ⊂ mu ⊂ lam`` in graded, descending-lex order.
    """

    nu = as_partition(nu)
    lam = as_partition(lam)
    if not contains(nu, lam):
        return []
    result = []
    def rec(i, prev, acc):
        if i == len(lam):
            result.append(Partition(acc))
            return
        for x in range(min(lam[i], prev), nu[i]-1, -1):
            rec(i+1, x, acc + (x,))
    rec(0, lam[0] if lam else 0, ())
    result.sort(key=graded_key)
    return result

def interlacing_below(lam):
    """
    All `mu` with ``mu ≺ lam``, i.e. `lam/mu` is a horizontal strip.
    """

    lam = as_partition(lam)
    ranges = [range(lam[i], lam[i+1]-1, -1) for i in range(len(lam))]
    return [Partition(parts) for parts in itertools.product(*ranges)]

def down_closure(partitions):
    """
    Every partition contained in at least one of `partitions`, sorted.
    """

    seen = set()
    for lam in partitions:
        seen.update(interval(EMPTY, lam))
    return sorted(seen, key=graded_key)

def _conjugate_interlacing_columns(nu_conj, first_column):
    """
    Conjugates `mu'` with ``mu'_1 = first_column`` interlacing above `nu_conj`.
    """

    # mu'_i ranges over [nu'_i, nu'_{i-1}] for i >= 2, and mu'_{L+2} = 0:
    L = len(nu_conj)
    ranges = [range(nu_conj[i-1], nu_conj[i]-1, -1) for i in range(1, L+1)]
    for rest in itertools.product(*ranges):
        yield (first_column,) + rest

def conjugate_interlacing_blocks(nu, cap, max_columns=None, start=None):
    """
    Partitions `mu` with ``mu' ≻ nu'`` grouped by the first column ``mu'_1``.

    Parameters
    ----------
    nu : Partition
        Lower partition.
    cap : int
        Largest first column ``mu'_1`` to include.
    max_columns : int
        If not None, only yield `mu` with at most this many columns
        (``mu_1 <= max_columns``).
    start : int
        Smallest first column to include; defaults to ``nu'_1``.

    Returns
    -------
    result : iterator of (int, list of Partition)
        Pairs of first column length and the partitions in that block, in
        increasing order of the first column.
    """

    nu = as_partition(nu)
    nu_conj = conjugate(nu)
    lo = nu_conj[0]
    if cap < lo:
        raise EmptyDomainError('first column cap {} is below nu\'_1 = {}'.format(
            cap, lo))
    if start is None:
        start = lo
    for m in range(max(start, lo), cap+1):
        block = []
        for cols in _conjugate_interlacing_columns(nu_conj, m):
            mu = conjugate(Partition(cols))
            if max_columns is not None and mu[0] > max_columns:
                continue
            block.append(mu)
        yield m, block

def enumerate_conjugate_interlacing(nu, first_column_cap):
    """
    Summation domain of the moment inversion formula.

    Parameters
    ----------
    nu : Partition
        Target partition.
    first_column_cap : int
        Upper bound on ``mu'_1``; must be at least ``nu'_1``.

    Returns
    -------
    result : list of Partition
        All `mu` with ``mu'_1 >= nu'_1 >= mu'_2 >= nu'_2 >= ...`` and
        ``mu'_1 <= first_column_cap``, ordered by ``mu'_1`` and then by the
        remaining columns in descending lexicographic order.
    """

    return [mu for _, block in conjugate_interlacing_blocks(nu, first_column_cap)
            for mu in block]

def conjugate_interlacing_count(nu, first_column_cap):
    """
    Cardinality of `enumerate_conjugate_interlacing` without enumerating.
    """

    nu_conj = conjugate(nu)
    if first_column_cap < nu_conj[0]:
        raise EmptyDomainError('first column cap {} is below nu\'_1 = {}'.format(
            first_column_cap, nu_conj[0]))
    return (first_column_cap - nu_conj[0] + 1) * \
        prod(nu_conj[i-1] - nu_conj[i] + 1 for i in range(1, len(nu_conj)+1))
