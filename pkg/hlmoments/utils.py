#!/usr/bin/env python

"""
Utility functions.
"""

# Copyright (c) 2026, hlmoments developers
# All rights reserved.
# Distributed under the terms of the BSD license:
# http://www.opensource.org/licenses/bsd-license

import logging
import os
import time
from functools import wraps

logger = logging.getLogger(__name__)

WORKERS_ENV_VAR = 'HLMOMENTS_WORKERS'

class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation"""
    pass

def _iterable(x):
    try:
        iter(x)
    except TypeError:
        return False
    else:
        return True

def split_evenly(n, k):
    """
    Split ``range(n)`` into `k` contiguous ranges whose lengths differ by at most one.

    Parameters
    ----------
    n : int
        Number of items.
    k : int
        Number of ranges.

    Returns
    -------
    result : list of range
        Contiguous ranges covering ``range(n)`` in order.

    Examples
    --------
    >>> [list(r) for r in split_evenly(5, 2)]
    [[0, 1, 2], [3, 4]]
    """

    q, r = divmod(n, k)
    result = []
    start = 0
    for i in range(k):
        stop = start + q + (1 if i < r else 0)
        result.append(range(start, stop))
        start = stop
    return result

def get_workers(default=1):
    """
    Number of worker processes, honoring the `HLMOMENTS_WORKERS` override.
    """

    value = os.environ.get(WORKERS_ENV_VAR)
    if value is None or value == '':
        return default
    try:
        workers = int(value)
    except ValueError:
        raise DomainError('{} must be a positive integer, got {!r}'.format(
            WORKERS_ENV_VAR, value))
    if workers < 1:
        raise DomainError('{} must be a positive integer, got {!r}'.format(
            WORKERS_ENV_VAR, value))
    return workers

def timed(func):
    """
    Log the wall time of `func`.

    Timing is logged at INFO when the call passes ``debug=True`` and at
    DEBUG otherwise, through the logger of the module defining `func`.
    """

    func_logger = logging.getLogger(func.__module__)

    @wraps(func)
    def wrapper_timer(*args, **kwargs):
        level = logging.INFO if kwargs.pop('debug', False) else logging.DEBUG
        if not func_logger.isEnabledFor(level):
            return func(*args, **kwargs)
        start_time = time.time()
        value = func(*args, **kwargs)
        func_logger.log(level, "Finished '%s' in %.3f secs",
                        func.__name__, time.time() - start_time)
        return value
    return wrapper_timer
