#!/usr/bin/env python

"""
Text codecs for partitions and exact rationals.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import json
from decimal import Decimal, localcontext

from ..partitions import InvalidPartitionError, Partition
from ..qseries import format_rational, to_rational

def parse_partition(text):
    """
    Parse a partition written as a JSON array, e.g. ``"[5, 2, 2, 1]"``.

    A bare comma-separated list ``"5,2,2,1"`` and the empty string are also
    accepted.
    """

    if isinstance(text, (list, tuple)):
        return Partition(text)
    text = text.strip()
    if text in ('', '()', '[]'):
        return Partition()
    if not text.startswith('['):
        text = '[' + text.strip('()') + ']'
    try:
        parts = json.loads(text)
    except ValueError:
        raise InvalidPartitionError('cannot parse {!r} as a partition'.format(text))
    if not isinstance(parts, list):
        raise InvalidPartitionError('cannot parse {!r} as a partition'.format(text))
    return Partition(parts)

def parse_partition_list(text):
    """
    Parse a JSON array of partitions, e.g. ``"[[1], []]"``.
    """

    try:
        items = json.loads(text)
    except ValueError:
        raise InvalidPartitionError('cannot parse {!r} as a list of '
                                    'partitions'.format(text))
    if not isinstance(items, list) or not all(isinstance(x, list) for x in items):
        raise InvalidPartitionError('expected a JSON array of arrays, got '
                                    '{!r}'.format(text))
    return [Partition(x) for x in items]

def format_partition(lam):
    """
    ``(5, 2, 2, 1)``-style text of a partition; ``()`` for the empty one.
    """

    lam = tuple(lam)
    if len(lam) == 1:
        return '({})'.format(lam[0])
    return str(lam)

def decimal_preview(x, digits):
    """
    Decimal approximation of a rational with `digits` significant digits.

    Only for display; exact values are always reported alongside.
    """

    x = to_rational(x)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))

def format_value(x, digits=None):
    """
    Exact ``num/den`` string, followed by a labeled decimal preview if
    `digits` is given.
    """

    exact = format_rational(x)
    if digits is None:
        return exact
    return '{} (~{} at {} digits)'.format(exact, decimal_preview(x, digits), digits)
