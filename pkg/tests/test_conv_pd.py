#!/usr/bin/env python

from fractions import Fraction
from unittest import main, TestCase

import deepdiff
import pandas as pd

from hlmoments.conv.pd import (distribution_to_df, moment_table_to_df,
                               verify_results_to_df)
from hlmoments.inversion import Distribution, moments_from_distribution

match = lambda a, b: False if deepdiff.DeepDiff(a, b) else True

class TestConvPandas(TestCase):
    def setUp(self):
        self.dist = Distribution({(): Fraction(1, 2), (2, 1): Fraction(1, 4),
                                  (1,): Fraction(1, 4)})

    def test_distribution_to_df(self):
        df = distribution_to_df(self.dist)
        assert list(df.index) == ['()', '(1)', '(2, 1)']
        assert list(df.columns) == ['size', 'length', 'mass', 'mass_float']
        assert match(df['mass_float'].tolist(), [0.5, 0.25, 0.25])
        assert list(df['size']) == [0, 1, 3]
        assert df.loc['(2, 1)', 'mass'] == Fraction(1, 4)

    def test_moment_table_to_df(self):
        M = moments_from_distribution(self.dist, 2, [(), (1,)])
        df = moment_table_to_df(M)
        assert list(df.index) == ['()', '(1)']
        assert df.loc['()', 'moment'] == 1

    def test_verify_results_to_df(self):
        df = verify_results_to_df([('hl-cancellation', 12, 12, 0),
                                   ('sur-count', 9, 10, 2)])
        self.assertSetEqual(set(df.index), {'hl-cancellation', 'sur-count'})
        assert df.loc['sur-count', 'failed'] == 1
        assert df.loc['sur-count', 'skipped'] == 2
        assert isinstance(df, pd.DataFrame)

if __name__ == '__main__':
    main()
