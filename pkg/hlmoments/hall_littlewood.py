#!/usr/bin/env python

"""
Closed-form Hall-Littlewood and q-Whittaker evaluations.

Principal specializations of Hall-Littlewood functions at ``t = 1/p`` count
surjections between finite abelian p-groups; one-variable q-Whittaker
branching weights give the second factor of the moment inversion
coefficients. Every function here returns an exact `fractions.Fraction`.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import logging
from fractions import Fraction
from math import comb, prod

from .partitions import as_partition, conjugate, contains, interlaces, \
    interval, multiplicities, n_stat
from .qseries import q_binomial, q_factorial, q_pochhammer, to_rational
from .utils import DomainError

logger = logging.getLogger(__name__)

class ParameterDomainError(DomainError):
    """Hall-Littlewood or q-Whittaker parameter outside its domain"""
    pass

class IntegralityError(ArithmeticError):
    """A quantity that must be a nonnegative integer evaluated to something else"""
    pass

class HLParams(object):
    """
    Hall-Littlewood parameter ``t`` with ``0 < t < 1``.

    Parameters
    ----------
    t : Fraction
        Usually ``1/p`` for a prime `p`, or ``1/q0`` for the residue field
        cardinality `q0` of a discrete valuation ring.
    """

    def __init__(self, t):
        t = to_rational(t)
        if not 0 < t < 1:
            raise ParameterDomainError('Hall-Littlewood parameter must satisfy '
                                       '0 < t < 1, got {}'.format(t))
        self.t = t

    @classmethod
    def from_residue_cardinality(cls, residue_cardinality):
        """
        Parameter ``t = 1/residue_cardinality``.
        """

        if residue_cardinality < 2:
            raise ParameterDomainError('residue cardinality must be at least 2, '
                                       'got {}'.format(residue_cardinality))
        return cls(Fraction(1, residue_cardinality))

    def __eq__(self, other):
        return isinstance(other, HLParams) and self.t == other.t

    def __hash__(self):
        return hash(self.t)

    def __repr__(self):
        return 'HLParams(t={})'.format(self.t)

def _check_t(t, allow_negative=False):
    t = to_rational(t)
    if t == 0 or abs(t) >= 1 or (t < 0 and not allow_negative):
        raise ParameterDomainError('t must satisfy 0 < {}t < 1, got {}'.format(
            '|t|, ' if allow_negative else '', t))
    return t

def _check_q(q):
    q = to_rational(q)
    if abs(q) >= 1:
        raise ParameterDomainError('q must satisfy |q| < 1, got {}'.format(q))
    return q

def principal_P(lam, u, t):
    """
    ``P_lam(u, ut, ut^2, ...; 0, t)``.

    Parameters
    ----------
    lam : Partition
        Index partition.
    u : Fraction
        Scale of the geometric alphabet.
    t : Fraction
        Hall-Littlewood parameter, ``0 < |t| < 1``.

    Returns
    -------
    result : fractions.Fraction
        ``u^|lam| t^n(lam) / prod_i (t;t)_{m_i(lam)}``.
    """

    lam = as_partition(lam)
    t = _check_t(t, allow_negative=True)
    u = to_rational(u)
    den = prod((q_factorial(m, t) for m in multiplicities(lam)), start=Fraction(1))
    return u**sum(lam) * t**n_stat(lam) / den

def principal_Q(lam, u, t):
    """
    ``Q_lam(u, ut, ut^2, ...; 0, t) = u^|lam| t^n(lam)``.
    """

    lam = as_partition(lam)
    t = _check_t(t, allow_negative=True)
    u = to_rational(u)
    return u**sum(lam) * t**n_stat(lam)

def principal_P_finite(lam, u, t, n):
    """
    ``P_lam(u, ut, ..., ut^{n-1}; 0, t)`` over `n` variables.

    Zero when `lam` has more than `n` parts.
    """

    lam = as_partition(lam)
    t = _check_t(t, allow_negative=True)
    if len(lam) > n:
        return Fraction(0)
    return principal_Q_finite(lam, u, t, n) / \
        prod((q_factorial(m, t) for m in multiplicities(lam)), start=Fraction(1))

def principal_Q_finite(lam, u, t, n):
    """
    ``Q_lam(u, ut, ..., ut^{n-1}; 0, t)`` over `n` variables.

    Zero when `lam` has more than `n` parts.
    """

    lam = as_partition(lam)
    t = _check_t(t, allow_negative=True)
    u = to_rational(u)
    if n < 0:
        raise ParameterDomainError('number of variables must be nonnegative')
    if len(lam) > n:
        return Fraction(0)
    return u**sum(lam) * t**n_stat(lam) * q_factorial(n, t) / \
        q_factorial(n - len(lam), t)

def skew_ratio(lam, mu, t, d=None):
    """
    ``P_{lam/mu}(1, t, ...; 0, t) / P_lam(1, t, ...; 0, t)``.

    Parameters
    ----------
    lam, mu : Partition
        Outer and inner partitions.
    t : Fraction
        Hall-Littlewood parameter, ``0 < t < 1``.
    d : int
        Number of columns in the product; defaults to ``mu_1``. Any
        ``d >= mu_1`` gives the same value.

    Returns
    -------
    result : fractions.Fraction
        Zero when `mu` is not contained in `lam`.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    t = _check_t(t)
    if d is None:
        d = mu[0]
    elif d < mu[0]:
        raise ParameterDomainError('d = {} is smaller than mu_1 = {}'.format(d, mu[0]))
    if not contains(mu, lam):
        return Fraction(0)
    lc = conjugate(lam)
    mc = conjugate(mu)
    result = Fraction(1)
    for i in range(d):
        diff = lc[i] - mc[i]
        result *= t**(comb(diff, 2) - comb(lc[i], 2)) * \
            q_pochhammer(t**(1 + diff), t, mc[i] - mc[i+1])
    return result

def skew_P_principal(lam, mu, u, t):
    """
    ``P_{lam/mu}(u, ut, ut^2, ...; 0, t)``.

    Computed by homogeneity as
    ``u^{|lam|-|mu|} skew_ratio(lam, mu, t) principal_P(lam, 1, t)``.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    u = to_rational(u)
    ratio = skew_ratio(lam, mu, t)
    if ratio == 0:
        return ratio
    return u**(sum(lam) - sum(mu)) * ratio * principal_P(lam, 1, t)

def qw_skew_P_one(lam, mu, x, q):
    """
    One-variable q-Whittaker skew function ``P_{lam/mu}(x; q, 0)``.

    Returns 0 unless ``mu ≺ lam``.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    q = _check_q(q)
    x = to_rational(x)
    if not interlaces(mu, lam):
        return Fraction(0)
    result = x**(sum(lam) - sum(mu))
    for i in range(len(mu)):
        result *= q_binomial(lam[i] - lam[i+1], lam[i] - mu[i], q)
    return result

def qw_skew_Q_one(lam, mu, x, q):
    """
    One-variable q-Whittaker skew function ``Q_{lam/mu}(x; q, 0)``.

    Returns 0 unless ``mu ≺ lam``.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    q = _check_q(q)
    x = to_rational(x)
    if not interlaces(mu, lam):
        return Fraction(0)
    result = x**(sum(lam) - sum(mu)) / q_factorial(lam[0] - mu[0], q)
    for i in range(len(lam) - 1):
        result *= q_binomial(mu[i] - mu[i+1], mu[i] - lam[i+1], q)
    return result

def surjection_count(lam, mu, residue_cardinality):
    """
    Number of surjections ``G_lam -> G_mu`` from principal specializations.

    Parameters
    ----------
    lam, mu : Partition
        Types of the source and target groups.
    residue_cardinality : int
        The prime `p` for abelian p-groups, or the residue field cardinality
        for modules over a discrete valuation ring; primality is not checked.

    Returns
    -------
    result : int
        ``P_{lam/mu}(t, t^2, ...) / (P_lam(t, t^2, ...) Q_mu(1, t, ...))``
        at ``t = 1/residue_cardinality``.
    """

    lam = as_partition(lam)
    mu = as_partition(mu)
    t = HLParams.from_residue_cardinality(residue_cardinality).t
    if not contains(mu, lam):
        return 0
    value = skew_P_principal(lam, mu, t, t) / \
        (principal_P(lam, t, t) * principal_Q(mu, 1, t))
    if value.denominator != 1 or value < 0:
        raise IntegralityError('#Sur(G_{}, G_{}) evaluated to {} at p = {}'.format(
            lam, mu, value, residue_cardinality))
    return int(value)

def automorphism_count(lam, residue_cardinality):
    """
    ``#Aut(G_lam)``, i.e. the number of surjections of `G_lam` onto itself.
    """

    return surjection_count(lam, lam, residue_cardinality)

def inversion_coefficient(nu, mu, t):
    """
    Coefficient of ``M_{G_mu}`` in the inversion formula for ``Pr(G = G_nu)``.

    Parameters
    ----------
    nu, mu : Partition
        Target type and moment index.
    t : Fraction
        ``1/p``, with ``0 < t < 1``.

    Returns
    -------
    result : fractions.Fraction
        ``(-1)^{|mu|-|nu|} t^{n(nu)+n(mu)+|mu|} /
        prod_i (t;t)_{mu'_i - nu'_i} (t;t)_{nu'_i - mu'_{i+1}}`` when
        ``mu' ≻ nu'`` and 0 otherwise.
    """

    nu = as_partition(nu)
    mu = as_partition(mu)
    t = _check_t(t)
    nc = conjugate(nu)
    mc = conjugate(mu)
    if not interlaces(nc, mc):
        return Fraction(0)
    sign = -1 if (sum(mu) - sum(nu)) % 2 else 1
    den = Fraction(1)
    for i in range(len(mc)):
        den *= q_factorial(mc[i] - nc[i], t) * q_factorial(nc[i] - mc[i+1], t)
    return sign * t**(n_stat(nu) + n_stat(mu) + sum(mu)) / den

def inversion_coefficient_product(nu, mu, t):
    """
    The inversion coefficient assembled from its three specialized factors.

    ``P_nu(t, t^2, ...; 0, t) Q_{mu'/nu'}(-t; t, 0) Q_mu(1, t, ...; 0, t)``;
    must agree with `inversion_coefficient`.
    """

    nu = as_partition(nu)
    mu = as_partition(mu)
    t = _check_t(t)
    return principal_P(nu, t, t) * \
        qw_skew_Q_one(conjugate(mu), conjugate(nu), -t, t) * \
        principal_Q(mu, 1, t)

def cancellation_sum(lam, nu, t):
    """
    ``sum_{nu ⊂ mu ⊂ lam} P_{lam/mu}(t, t^2, ...; 0, t) Q_{mu'/nu'}(-t; t, 0)``.

    The sum equals 1 when ``lam == nu`` and 0 otherwise.
    """

    lam = as_partition(lam)
    nu = as_partition(nu)
    t = _check_t(t)
    nc = conjugate(nu)
    total = Fraction(0)
    for mu in interval(nu, lam):
        weight = qw_skew_Q_one(conjugate(mu), nc, -t, t)
        if weight:
            total += skew_P_principal(lam, mu, t, t) * weight
    return total
