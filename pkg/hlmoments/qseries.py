#!/usr/bin/env python

"""
Exact q-series primitives.

All scalars are `fractions.Fraction` instances; nothing in this module rounds.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import numbers
import re
from fractions import Fraction
from functools import lru_cache

from .utils import DomainError

rational_pattern = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')

class QSeriesDomainError(DomainError):
    """Argument outside the domain of a q-series primitive"""
    pass

def to_rational(x):
    """
    Convert a value to an exact rational.

    Parameters
    ----------
    x : Fraction, int or str
        Value to convert. Strings must have the form ``"a/b"`` or ``"a"``;
        floats are rejected so that no rounding enters silently.

    Returns
    -------
    result : fractions.Fraction
    """

    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise QSeriesDomainError('booleans are not rationals')
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, numbers.Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        m = rational_pattern.match(x)
        if not m:
            raise QSeriesDomainError('cannot parse {!r} as a rational "a/b"'.format(x))
        num, den = m.groups()
        if den is not None and int(den) == 0:
            raise QSeriesDomainError('zero denominator in {!r}'.format(x))
        return Fraction(int(num), int(den) if den is not None else 1)
    raise QSeriesDomainError('expected an exact rational, got {!r}'.format(x))

def format_rational(x):
    """
    Canonical ``"num/den"`` string of a rational in lowest terms.
    """

    x = to_rational(x)
    return '{}/{}'.format(x.numerator, x.denominator)

def q_pochhammer(a, q, n):
    """
    q-Pochhammer symbol ``(a;q)_n = prod_{i=1}^n (1 - a q^{i-1})``.

    Parameters
    ----------
    a, q : Fraction
        Base and ratio; ``q = 0`` is allowed, with ``0**0 = 1``.
    n : int
        Number of factors; must be nonnegative.

    Returns
    -------
    result : fractions.Fraction

    Examples
    --------
    >>> q_pochhammer(Fraction(1, 2), Fraction(1, 2), 2)
    Fraction(3, 8)
    """

    if n < 0:
        raise QSeriesDomainError('q-Pochhammer length must be nonnegative, '
                                 'got {}'.format(n))
    a = to_rational(a)
    q = to_rational(q)
    result = Fraction(1)
    term = a
    for _ in range(n):
        result *= 1 - term
        term *= q
    return result

@lru_cache(maxsize=4096)
def _q_factorial(m, q):
    if m == 0:
        return Fraction(1)
    return _q_factorial(m-1, q) * (1 - q**m)

def q_factorial(m, q):
    """
    ``(q;q)_m``, memoized on ``(m, q)``.
    """

    if m < 0:
        raise QSeriesDomainError('q-factorial index must be nonnegative, '
                                 'got {}'.format(m))
    return _q_factorial(m, to_rational(q))

def q_binomial(a, b, q):
    """
    Gaussian binomial coefficient ``(q;q)_a / ((q;q)_b (q;q)_{a-b})``.

    Returns 0 when ``b < 0`` or ``b > a``.

    Parameters
    ----------
    a : int
        Upper index, nonnegative.
    b : int
        Lower index.
    q : Fraction
        Evaluation point.

    Returns
    -------
    result : fractions.Fraction
    """

    if a < 0:
        raise QSeriesDomainError('upper index must be nonnegative, got {}'.format(a))
    if b < 0 or b > a:
        return Fraction(0)
    q = to_rational(q)
    den = q_factorial(b, q) * q_factorial(a-b, q)
    if den == 0:
        raise QSeriesDomainError('q = {} makes (q;q)_{} or (q;q)_{} vanish'.format(
            q, b, a-b))
    return q_factorial(a, q) / den

def euler_product(q, terms):
    """
    Truncated Euler product ``prod_{k=1}^{terms} (1 - q^k)``.

    Parameters
    ----------
    q : Fraction
        Ratio with ``|q| < 1``.
    terms : int
        Number of factors, positive.

    Returns
    -------
    result : fractions.Fraction
    """

    q = to_rational(q)
    if abs(q) >= 1:
        raise QSeriesDomainError('Euler product requires |q| < 1, got {}'.format(q))
    if terms < 1:
        raise QSeriesDomainError('number of terms must be positive, got {}'.format(terms))
    return q_pochhammer(q, q, terms)
