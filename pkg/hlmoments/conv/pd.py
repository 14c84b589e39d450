#!/usr/bin/env python

"""
Tabular views of distributions, moment tables and reports as Pandas DataFrames.

Exact values are kept as `fractions.Fraction` objects in object columns; a
float column is added next to each for sorting and plotting.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import pandas as pd

from ..partitions import graded_key
from .utils import format_partition

def _frame(items, value_name):
    records = []
    index = []
    for lam, v in sorted(items, key=lambda kv: graded_key(kv[0])):
        index.append(format_partition(lam))
        records.append({'size': sum(lam), 'length': len(lam),
                        value_name: v, value_name + '_float': float(v)})
    df = pd.DataFrame.from_records(records, columns=['size', 'length', value_name,
                                                     value_name + '_float'])
    df.index = pd.Index(data=index, name='partition', dtype=object)
    return df

def distribution_to_df(dist):
    """
    Masses of a single-prime distribution, one row per partition.

    Parameters
    ----------
    dist : hlmoments.inversion.Distribution
        Distribution to convert.

    Returns
    -------
    df : pandas.DataFrame
        Indexed by the partition text; columns `size`, `length`, `mass` and
        `mass_float`.
    """

    return _frame(dist.items(), 'mass')

def moment_table_to_df(M):
    """
    Tabulated moments of a single-prime moment table.
    """

    return _frame(M.items(), 'moment')

def report_to_df(report):
    """
    Closed-loop report rows.

    Returns
    -------
    df : pandas.DataFrame
        Indexed by the partition text with columns `frequency`, `estimate`,
        `gap`, `stderr` and `flagged`.
    """

    records = []
    index = []
    for row in report.rows:
        index.append(format_partition(row.nu))
        records.append({'frequency': float(row.frequency),
                        'estimate': float(row.estimate),
                        'gap': float(row.gap),
                        'stderr': row.stderr,
                        'flagged': bool(row.flagged)})
    df = pd.DataFrame.from_records(records, columns=['frequency', 'estimate', 'gap',
                                                     'stderr', 'flagged'])
    df.index = pd.Index(data=index, name='partition', dtype=object)
    return df

def verify_results_to_df(results):
    """
    Pass/fail table of verification suites.

    Parameters
    ----------
    results : list of (str, int, int, int)
        Suite name, number passed, number of cases checked and number of
        cases skipped for exceeding the enumeration budget.
    """

    df = pd.DataFrame.from_records(results, columns=['suite', 'passed', 'total',
                                                     'skipped'])
    df['failed'] = df['total'] - df['passed']
    return df.set_index('suite')
