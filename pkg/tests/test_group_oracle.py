#!/usr/bin/env python

from fractions import Fraction
from unittest import main, TestCase

from hypothesis import given, settings, strategies as st

from hlmoments.group_oracle import (AbelianGroupType, EnumerationBudgetError,
                                    ExcessMassError, NegativeMassError,
                                    brute_hom_count,
                                    hom_count_formula, brute_sur_count,
                                    exact_moment)
from hlmoments.hall_littlewood import surjection_count
from hlmoments.partitions import EMPTY, enumerate_up_to
from hlmoments.utils import DomainError

small = enumerate_up_to(3)

class TestAbelianGroupType(TestCase):
    def test_basic(self):
        G = AbelianGroupType((2, 1), 2)
        assert G.moduli == (4, 2)
        assert G.order == 8
        assert len(list(G.elements())) == 8
        assert G.add((3, 1), (1, 1)) == (0, 0)
        assert sorted(G.torsion(1)) == [(0, 0), (0, 1), (2, 0), (2, 1)]
        assert AbelianGroupType(EMPTY, 3).order == 1
        self.assertRaises(DomainError, AbelianGroupType, (1,), 1)

class TestCounts(TestCase):
    def test_hom_count(self):
        for lam in small:
            for mu in small:
                assert brute_hom_count(lam, mu, 2) == hom_count_formula(lam, mu, 2)

    def test_sur_count_small(self):
        assert brute_sur_count((2,), (1,), 3) == 2
        assert brute_sur_count((1, 1), (1,), 2) == 3
        assert brute_sur_count((1, 1), (1, 1), 3) == 48
        assert brute_sur_count((1,), (1, 1), 2) == 0
        assert brute_sur_count(EMPTY, EMPTY, 5) == 1

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(small), st.sampled_from(small),
           st.sampled_from([2, 3]))
    def test_sur_count_matches_specializations(self, lam, mu, p):
        assert brute_sur_count(lam, mu, p) == surjection_count(lam, mu, p)

    def test_sur_count_exhaustive(self):
        for p, max_size in [(2, 6), (3, 4), (5, 3)]:
            for lam in enumerate_up_to(max_size):
                for mu in enumerate_up_to(sum(lam)):
                    assert brute_sur_count(lam, mu, p) == surjection_count(lam, mu, p), \
                        (lam, mu, p)

    def test_sur_count_elementary_rank_five(self):
        # |GL_5(F_2)|
        assert brute_sur_count((1,)*5, (1,)*5, 2) == 9999360

    def test_budget(self):
        self.assertRaises(EnumerationBudgetError, brute_sur_count, (2, 1), (1, 1), 2, 3)
        self.assertRaises(EnumerationBudgetError, brute_hom_count, (2, 1), (1, 1), 2, 10)

class TestExactMoment(TestCase):
    def test_mixture(self):
        dist = {EMPTY: Fraction(1, 2), (1,): Fraction(1, 2)}
        assert exact_moment(dist, EMPTY, 2) == 1
        assert exact_moment(dist, (1,), 2) == Fraction(1, 2)
        assert exact_moment(dist, (1,), 5) == 2

    def test_negative_mass(self):
        self.assertRaises(NegativeMassError, exact_moment,
                          {EMPTY: Fraction(-1, 2)}, EMPTY, 2)

    def test_excess_mass(self):
        self.assertRaises(ExcessMassError, exact_moment,
                          {EMPTY: Fraction(2, 3), (1,): Fraction(1, 2)}, (1,), 2)
        assert exact_moment({EMPTY: Fraction(1, 2), (1,): Fraction(1, 2)}, (1,), 3) == 1

if __name__ == '__main__':
    main()
