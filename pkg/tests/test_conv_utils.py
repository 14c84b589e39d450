#!/usr/bin/env python

from fractions import Fraction
from unittest import main, TestCase

from hlmoments.conv.utils import (parse_partition, parse_partition_list,
                                  format_partition, decimal_preview,
                                  format_value)
from hlmoments.partitions import InvalidPartitionError

class TestConvUtils(TestCase):
    def test_parse_partition(self):
        assert parse_partition('[5, 2, 2, 1]') == (5, 2, 2, 1)
        assert parse_partition('5,2,2,1') == (5, 2, 2, 1)
        assert parse_partition('(3, 1)') == (3, 1)
        assert parse_partition('[]') == ()
        assert parse_partition('') == ()
        assert parse_partition([2, 1, 0]) == (2, 1)

    def test_parse_partition_errors(self):
        self.assertRaises(InvalidPartitionError, parse_partition, '[1, 2]')
        self.assertRaises(InvalidPartitionError, parse_partition, 'abc')
        self.assertRaises(InvalidPartitionError, parse_partition, '[{"a": 1}]')

    def test_parse_partition_list(self):
        assert parse_partition_list('[[1], []]') == [(1,), ()]
        self.assertRaises(InvalidPartitionError, parse_partition_list, '[1, 2]')
        self.assertRaises(InvalidPartitionError, parse_partition_list, '[[1]')

    def test_format(self):
        assert format_partition((5,)) == '(5)'
        assert format_partition((2, 1)) == '(2, 1)'
        assert format_partition(()) == '()'
        assert decimal_preview(Fraction(1, 3), 5) == '0.33333'
        assert format_value(Fraction(2, 4)) == '1/2'
        assert format_value(Fraction(1, 3), 3) == '1/3 (~0.333 at 3 digits)'

if __name__ == '__main__':
    main()
