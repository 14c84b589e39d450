#!/usr/bin/env python

"""
Brute-force computations in finite abelian p-groups.

Groups are ``G_lam = Z/p^{lam_1} + Z/p^{lam_2} + ...`` and elements are
coordinate tuples. A homomorphism out of `G_lam` is determined by the images
of its standard generators, so homomorphisms and surjections are counted by
enumerating admissible generator images.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import itertools
import logging
from collections import namedtuple
from fractions import Fraction
from math import prod

from .hall_littlewood import surjection_count
from .partitions import as_partition
from .qseries import to_rational
from .utils import DomainError

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**7

class EnumerationBudgetError(DomainError):
    """Brute-force enumeration would exceed the configured budget"""
    pass

class NegativeMassError(DomainError):
    """Distribution assigns a negative mass"""
    pass

class ExcessMassError(DomainError):
    """Distribution masses sum to more than 1"""
    pass

class AbelianGroupType(namedtuple('AbelianGroupType', ['lam', 'p'])):
    """
    Isomorphism type ``G_lam`` of a finite abelian p-group.
    """

    __slots__ = ()

    def __new__(cls, lam, p):
        if p < 2:
            raise DomainError('p must be at least 2, got {}'.format(p))
        return super().__new__(cls, as_partition(lam), p)

    @property
    def moduli(self):
        return tuple(self.p**x for x in self.lam)

    @property
    def order(self):
        return self.p**sum(self.lam)

    def elements(self):
        """
        All coordinate tuples, coordinate i reduced modulo ``p^{lam_i}``.
        """

        return itertools.product(*(range(m) for m in self.moduli))

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def zero(self):
        return (0,)*len(self.lam)

    def torsion(self, e):
        """
        Elements annihilated by ``p^e``.
        """

        ranges = []
        for x in self.lam:
            step = self.p**max(x - e, 0)
            ranges.append(range(0, self.p**x, step))
        return list(itertools.product(*ranges))

def _cyclic(group, x):
    result = [group.zero()]
    y = x
    while y != group.zero():
        result.append(y)
        y = group.add(y, x)
    return result

def _join(group, H, x):
    """
    Subgroup generated by `H` and `x`.
    """

    if x in H:
        return H
    return frozenset(group.add(h, c) for h in H for c in _cyclic(group, x))

def _generator_images(lam, target):
    return [target.torsion(x) for x in lam]

def _check_budget(candidates, budget, lam, mu, p):
    if candidates > budget:
        raise EnumerationBudgetError(
            '{} candidate maps from G_{} to G_{} at p = {} exceed the budget {}; '
            'use hall_littlewood.surjection_count instead'.format(
                candidates, lam, mu, p, budget))

def brute_hom_count(lam, mu, p, budget=DEFAULT_BUDGET):
    """
    Number of homomorphisms ``G_lam -> G_mu`` by enumerating generator images.
    """

    lam = as_partition(lam)
    target = AbelianGroupType(mu, p)
    images = _generator_images(lam, target)
    candidates = prod(len(a) for a in images)
    _check_budget(candidates, budget, lam, target.lam, p)
    return sum(1 for _ in itertools.product(*images))

def hom_count_formula(lam, mu, p):
    """
    ``#Hom(G_lam, G_mu) = prod_{i,j} p^{min(lam_i, mu_j)}``.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    return prod(p**min(a, b) for a in lam for b in mu)

def brute_sur_count(lam, mu, p, budget=DEFAULT_BUDGET):
    """
    Number of surjections ``G_lam -> G_mu`` by enumeration.

    Parameters
    ----------
    lam, mu : Partition
        Types of the source and target groups.
    p : int
        The prime.
    budget : int
        Largest number of subgroup extensions the enumeration may perform.

    Returns
    -------
    result : int

    Notes
    -----
    Generator images are chosen one generator at a time, memoized on the
    subgroup `H` generated by the images chosen so far. Images in the same
    coset of ``H`` within the admissible image set generate the same
    subgroup, so each coset is extended once and weighted by its size. A
    choice counts if its images generate all of `G_mu`.

    Examples
    --------
    >>> brute_sur_count((2,), (1,), 3)
    2
    """

    lam = as_partition(lam)
    target = AbelianGroupType(mu, p)
    order = target.order
    if order > p**sum(lam):
        return 0
    images = _generator_images(lam, target)
    memo = {}
    work = [0]

    def extensions(i, H):
        allowed = images[i]
        seen = set()
        inside = [x for x in allowed if x in H]
        for x in allowed:
            if x in seen:
                continue
            coset = {target.add(x, h) for h in inside}
            seen |= coset
            work[0] += 1
            if work[0] > budget:
                raise EnumerationBudgetError(
                    'counting surjections from G_{} to G_{} at p = {} needs more '
                    'than {} subgroup extensions; use '
                    'hall_littlewood.surjection_count instead'.format(
                        lam, target.lam, p, budget))
            yield len(coset), _join(target, H, x)

    def count(i, H):
        if len(H) == order:
            return prod(len(a) for a in images[i:])
        if i == len(images):
            return 0
        key = (i, H)
        if key not in memo:
            memo[key] = sum(weight * count(i+1, K) for weight, K in extensions(i, H))
        return memo[key]

    result = count(0, frozenset([target.zero()]))
    logger.debug('#Sur(G_%s, G_%s) = %d at p = %d (%d subgroup states, %d extensions)',
                 lam, target.lam, result, p, len(memo), work[0])
    return result

def _masses(dist):
    entries = dist.entries if hasattr(dist, 'entries') else dist
    for nu, mass in entries.items():
        mass = to_rational(mass)
        if mass < 0:
            raise NegativeMassError('negative mass {} at {}'.format(mass, nu))
        yield as_partition(nu), mass

def exact_moment(dist, mu, p):
    """
    ``E[#Sur(G, G_mu)]`` for a finitely supported distribution.

    Parameters
    ----------
    dist : Distribution or dict
        Maps partitions to nonnegative masses; sub-probability totals are
        allowed.
    mu : Partition
        Moment index.
    p : int
        The prime.

    Returns
    -------
    result : fractions.Fraction
    """

    mu = as_partition(mu)
    masses = list(_masses(dist))
    mass_total = sum((mass for _, mass in masses), Fraction(0))
    if mass_total > 1:
        raise ExcessMassError('total mass {} exceeds 1'.format(mass_total))
    total = Fraction(0)
    for nu, mass in masses:
        if mass:
            total += mass * surjection_count(nu, mu, p)
    return total
