#!/usr/bin/env python

import logging
import os
from unittest import main, TestCase

from hlmoments.utils import (DomainError, WORKERS_ENV_VAR, split_evenly, get_workers,
                             timed)

@timed
def double(x):
    return 2*x

class TestUtils(TestCase):
    def test_split_evenly(self):
        assert [list(r) for r in split_evenly(5, 2)] == [[0, 1, 2], [3, 4]]
        assert [len(r) for r in split_evenly(13, 5)] == [3, 3, 3, 2, 2]
        assert [list(r) for r in split_evenly(2, 3)] == [[0], [1], []]

    def test_get_workers(self):
        saved = os.environ.pop(WORKERS_ENV_VAR, None)
        try:
            assert get_workers(3) == 3
            os.environ[WORKERS_ENV_VAR] = '4'
            assert get_workers() == 4
            os.environ[WORKERS_ENV_VAR] = 'many'
            self.assertRaises(DomainError, get_workers)
            os.environ[WORKERS_ENV_VAR] = '0'
            self.assertRaises(DomainError, get_workers)
        finally:
            os.environ.pop(WORKERS_ENV_VAR, None)
            if saved is not None:
                os.environ[WORKERS_ENV_VAR] = saved

    def test_timed(self):
        with self.assertLogs(__name__, level=logging.INFO) as cm:
            assert double(4, debug=True) == 8
        assert "Finished 'double'" in cm.output[0]
        assert double(5) == 10

if __name__ == '__main__':
    main()
