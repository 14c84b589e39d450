#!/usr/bin/env python

from unittest import main, TestCase

import deepdiff
from hypothesis import given, settings, strategies as st

from hlmoments.partitions import (Partition, InvalidPartitionError,
                                  EmptyDomainError, EMPTY, as_partition,
                                  conjugate, size, length, multiplicity,
                                  multiplicities, n_stat, n_stat_conjugate_form,
                                  interlaces, contains, partitions_of,
                                  enumerate_up_to, interval, interlacing_below,
                                  down_closure, conjugate_interlacing_blocks,
                                  enumerate_conjugate_interlacing,
                                  conjugate_interlacing_count)

match = lambda a, b: False if deepdiff.DeepDiff(a, b) else True

partitions = st.lists(st.integers(min_value=0, max_value=6), max_size=6).map(
    lambda x: Partition(sorted(x, reverse=True)))

class TestPartition(TestCase):
    def test_trailing_zeros(self):
        lam = Partition([3, 1, 0, 0])
        assert lam == (3, 1)
        assert lam[5] == 0
        assert lam.part(1) == 3
        assert lam.part(3) == 0

    def test_invalid(self):
        self.assertRaises(InvalidPartitionError, Partition, [1, 2])
        self.assertRaises(InvalidPartitionError, Partition, [2, -1])
        self.assertRaises(InvalidPartitionError, Partition, [1.5])
        self.assertRaises(InvalidPartitionError, Partition, 'abc')
        self.assertRaises(InvalidPartitionError, Partition, [True])

    def test_statistics(self):
        lam = Partition([5, 2, 2, 1])
        assert conjugate(lam) == (4, 3, 1, 1, 1)
        assert conjugate((3, 3)) == (2, 2, 2)
        assert size(lam) == 10
        assert length(lam) == 4
        assert n_stat(lam) == 9
        assert n_stat_conjugate_form(lam) == 9
        assert multiplicity((2, 2, 1), 2) == 2
        assert multiplicity((2, 2, 1), 3) == 0
        assert conjugate(EMPTY) == ()
        assert n_stat(EMPTY) == 0

    def test_multiplicities(self):
        assert multiplicities((3, 3, 1)) == (1, 0, 2)
        assert multiplicities(EMPTY) == ()

    @given(partitions)
    def test_conjugate_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert size(conjugate(lam)) == size(lam)
        assert n_stat(lam) == n_stat_conjugate_form(lam)

class TestOrders(TestCase):
    def test_interlaces(self):
        assert interlaces((1,), (2, 1))
        assert interlaces((2,), (2, 1))
        assert not interlaces((1, 1), (2, 1, 1, 1))
        assert interlaces(EMPTY, (3,))
        assert not interlaces(EMPTY, (1, 1))

    def test_contains(self):
        assert contains((1,), (2, 1))
        assert contains(EMPTY, EMPTY)
        assert not contains((1, 1, 1), (3, 1))

    def test_partitions_of(self):
        assert list(partitions_of(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                          (1, 1, 1, 1)]
        assert list(partitions_of(0)) == [()]
        assert list(partitions_of(4, max_part=2)) == [(2, 2), (2, 1, 1),
                                                      (1, 1, 1, 1)]

    def test_enumerate_up_to(self):
        assert enumerate_up_to(2) == [(), (1,), (2,), (1, 1)]
        assert len(enumerate_up_to(4)) == 12
        assert len(enumerate_up_to(8)) == 67

    def test_interval(self):
        assert interval((1,), (2, 1)) == [(1,), (2,), (1, 1), (2, 1)]
        assert interval((2,), (1, 1)) == []
        assert interval(EMPTY, EMPTY) == [()]

    def test_interlacing_below(self):
        assert sorted(interlacing_below((2, 1))) == sorted(
            [(2, 1), (2,), (1, 1), (1,)])
        assert interlacing_below(EMPTY) == [()]

    def test_down_closure(self):
        assert down_closure([(2,), (1, 1)]) == [(), (1,), (2,), (1, 1)]

    @given(partitions, partitions)
    def test_interval_members(self, nu, lam):
        for mu in interval(nu, lam):
            assert contains(nu, mu) and contains(mu, lam)

class TestConjugateInterlacing(TestCase):
    def test_small_domains(self):
        assert enumerate_conjugate_interlacing((1,), 2) == \
            [(2,), (1,), (2, 1), (1, 1)]
        assert enumerate_conjugate_interlacing(EMPTY, 3) == \
            [(), (1,), (1, 1), (1, 1, 1)]

        # mu' = (1, 1) also interlaces above nu' = (1)
        assert enumerate_conjugate_interlacing((1,), 1) == [(2,), (1,)]

    def test_empty_domain(self):
        self.assertRaises(EmptyDomainError, enumerate_conjugate_interlacing,
                          (1, 1), 1)
        self.assertRaises(EmptyDomainError, conjugate_interlacing_count,
                          (1, 1), 1)

    def test_blocks(self):
        blocks = list(conjugate_interlacing_blocks((1,), 3, max_columns=1))
        assert blocks == [(1, [(1,)]), (2, [(1, 1)]), (3, [(1, 1, 1)])]
        blocks = list(conjugate_interlacing_blocks(EMPTY, 3, start=2))
        assert [m for m, _ in blocks] == [2, 3]

    @settings(max_examples=50)
    @given(partitions.filter(lambda x: len(x) <= 3),
           st.integers(min_value=0, max_value=3))
    def test_count_and_membership(self, nu, extra):
        cap = conjugate(nu)[0] + extra
        domain = enumerate_conjugate_interlacing(nu, cap)
        assert len(domain) == conjugate_interlacing_count(nu, cap)
        assert len(set(domain)) == len(domain)
        for mu in domain:
            assert interlaces(conjugate(nu), conjugate(mu))
            assert conjugate(mu)[0] <= cap

if __name__ == '__main__':
    main()
