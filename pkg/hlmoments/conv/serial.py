#!/usr/bin/env python

"""
JSON schemas for moment tables, distributions, diagnostics and reports.

Rationals are written as ``"num/den"`` strings and partitions as arrays of
parts, so every document re-parses to identical exact values::

    {"p": 2, "entries": [{"partition": [1, 1], "value": "3/1"}, ...]}

Tables over several primes carry ``"primes"`` instead of ``"p"`` and a
``"partitions"`` array of arrays per entry. Tables computed from a distribution
also carry its entries under ``"support"``.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import json
import sys

from ..inversion import Distribution, MomentTable, MultiMomentTable, \
    moments_from_distribution, moments_from_multi_distribution
from ..partitions import Partition, graded_key
from ..qseries import format_rational, to_rational
from ..utils import DomainError

class SchemaError(DomainError):
    """JSON document does not follow the expected schema"""
    pass

def _require(data, key):
    if not isinstance(data, dict) or key not in data:
        raise SchemaError('missing field {!r}'.format(key))
    return data[key]

def _is_multi_key(key):
    return len(key) > 0 and isinstance(key[0], tuple)

def _entries(items, key='value'):
    return [{'partition': list(lam), key: format_rational(v)}
            for lam, v in sorted(items, key=lambda kv: graded_key(kv[0]))]

def _multi_entries(items):
    return [{'partitions': [list(lam) for lam in lams], 'value': format_rational(v)}
            for lams, v in sorted(items, key=lambda kv: [graded_key(x) for x in kv[0]])]

def _parse_entries(data):
    entries = {}
    for entry in _require(data, 'entries'):
        if 'partitions' in entry:
            key = tuple(Partition(x) for x in entry['partitions'])
        else:
            key = Partition(_require(entry, 'partition'))
        if key in entries:
            raise SchemaError('duplicate entry for {}'.format(key))
        entries[key] = to_rational(_require(entry, 'value'))
    return entries

def _support_entries(dist):
    items = list(dist.items())
    if items and _is_multi_key(items[0][0]):
        return _multi_entries(items)
    return _entries(items)

def moment_table_to_json(M):
    """
    JSON-ready dict of a single- or multi-prime moment table.

    Tabulated entries are written, together with the support of the source
    distribution when the table has one. Other providers do not serialize.
    """

    if isinstance(M, MultiMomentTable):
        if M.factors is not None:
            return {'primes': M.primes,
                    'factors': [moment_table_to_json(f) for f in M.factors]}
        data = {'primes': M.primes, 'entries': _multi_entries(M.entries.items())}
    else:
        data = {'p': M.p, 'entries': _entries(M.items())}
    if M.support is not None:
        data['support'] = _support_entries(M.support)
    return data

def _check_against_support(M, entries):
    for key, value in entries.items():
        if M.get(key) != value:
            raise SchemaError('moment {} at {} disagrees with the support, which '
                              'gives {}'.format(value, key, M.get(key)))
    return M

def moment_table_from_json(data):
    """
    Inverse of `moment_table_to_json`.

    A table written with its support reads back with the support and a
    provider computing further moments from it.
    """

    if 'primes' in data:
        if 'factors' in data:
            return MultiMomentTable(data['primes'],
                                    factors=[moment_table_from_json(f)
                                             for f in data['factors']])
        entries = _parse_entries(data)
        if 'support' in data:
            dist = Distribution(_parse_entries({'entries': data['support']}))
            return _check_against_support(
                moments_from_multi_distribution(dist, data['primes'], []), entries)
        return MultiMomentTable(data['primes'], entries)
    entries = _parse_entries(data)
    if 'support' in data:
        dist = Distribution(_parse_entries({'entries': data['support']}))
        return _check_against_support(
            moments_from_distribution(dist, _require(data, 'p'), []), entries)
    return MomentTable(_require(data, 'p'), entries)

def distribution_to_json(dist, p=None):
    data = {}
    if p is not None:
        data['p'] = p
    data['entries'] = _support_entries(dist)
    return data

def distribution_from_json(data):
    """
    Distribution and its prime (None if the document names none).
    """

    return Distribution(_parse_entries(data)), data.get('p', data.get('primes'))

def diagnostics_to_json(diagnostics):
    d = diagnostics._asdict()
    d['partial_sums'] = [format_rational(x) for x in d['partial_sums']]
    if d['last_block'] is not None:
        d['last_block'] = format_rational(d['last_block'])
    if isinstance(d['cap'], tuple):
        d['cap'] = list(d['cap'])
    return d

def report_to_json(report):
    rows = []
    for row in report.rows:
        rows.append({'partition': list(row.nu),
                     'frequency': format_rational(row.frequency),
                     'estimate': format_rational(row.estimate),
                     'gap': format_rational(row.gap),
                     'stderr': row.stderr,
                     'flagged': bool(row.flagged),
                     'partial_sums': [format_rational(x) for x in row.partial_sums]})
    return {'config': report.config.to_dict(), 'cap': report.cap, 'rows': rows}

def load_json(path):
    """
    Read a JSON document from `path`, or from stdin if `path` is ``-``.
    """

    try:
        if path == '-':
            return json.load(sys.stdin)
        with open(path) as f:
            return json.load(f)
    except ValueError as e:
        raise SchemaError('{} is not valid JSON: {}'.format(path, e))
