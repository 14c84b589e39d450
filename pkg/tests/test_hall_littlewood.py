#!/usr/bin/env python

from fractions import Fraction
from unittest import main, TestCase

from hypothesis import given, settings, strategies as st

from hlmoments.hall_littlewood import (HLParams, ParameterDomainError,
                                       principal_P, principal_Q,
                                       principal_P_finite, principal_Q_finite,
                                       skew_ratio, skew_P_principal,
                                       qw_skew_P_one, qw_skew_Q_one,
                                       surjection_count, automorphism_count,
                                       inversion_coefficient,
                                       inversion_coefficient_product,
                                       cancellation_sum)
from hlmoments.partitions import (EMPTY, enumerate_up_to, interval,
                                  conjugate_interlacing_count,
                                  enumerate_conjugate_interlacing, conjugate)

half = Fraction(1, 2)
third = Fraction(1, 3)

small = enumerate_up_to(4)

class TestParams(TestCase):
    def test_params(self):
        assert HLParams.from_residue_cardinality(3).t == third
        assert HLParams(half) == HLParams('1/2')
        self.assertRaises(ParameterDomainError, HLParams, 1)
        self.assertRaises(ParameterDomainError, HLParams, 0)
        self.assertRaises(ParameterDomainError, HLParams.from_residue_cardinality, 1)

    def test_bad_t(self):
        self.assertRaises(ParameterDomainError, principal_P, (1,), 1, 1)
        self.assertRaises(ParameterDomainError, skew_ratio, (1,), (), -half)
        self.assertRaises(ParameterDomainError, qw_skew_Q_one, (1,), (), 1, 1)

class TestPrincipal(TestCase):
    def test_values(self):
        assert principal_P((1, 1), 1, half) == Fraction(4, 3)
        assert principal_P(EMPTY, 5, half) == 1
        assert principal_Q((2, 1), 2, half) == 8 * half
        assert principal_P_finite((1,), 1, half, 2) == Fraction(3, 2)
        assert principal_P_finite((1, 1, 1), 1, half, 2) == 0

    def test_finite_limit(self):
        # the finite alphabet approaches the infinite one geometrically
        lam = (2, 1)
        gap = abs(principal_Q_finite(lam, 1, half, 30) - principal_Q(lam, 1, half))
        assert gap < Fraction(1, 10**8)

    def test_skew(self):
        t = Fraction(1, 5)
        assert skew_ratio((1, 1), (1,), t) == (1 - t**2) / t
        assert skew_ratio((1,), (1,), t) == 1 - t
        assert skew_ratio((2,), (1, 1), t) == 0
        assert skew_ratio((2, 1), (2,), t, d=4) == skew_ratio((2, 1), (2,), t)
        self.assertRaises(ParameterDomainError, skew_ratio, (2, 1), (2,), t, 1)
        assert skew_P_principal((1,), EMPTY, t, t) == t / (1 - t)
        assert skew_P_principal((1, 1), (1,), t, t) == t / (1 - t)
        assert skew_P_principal((2,), (1,), t, t) == t

    def test_skew_matches_unskewed(self):
        for lam in small:
            assert skew_P_principal(lam, EMPTY, 2, third) == principal_P(lam, 2, third)

    def test_qwhittaker_one_variable(self):
        x = Fraction(2, 7)
        q = third
        assert qw_skew_Q_one((1,), EMPTY, x, q) == x / (1 - q)
        assert qw_skew_P_one((2,), (1,), x, q) == x * (1 + q)
        assert qw_skew_P_one((1, 1), EMPTY, x, q) == 0
        assert qw_skew_Q_one((1, 1), EMPTY, x, q) == 0

class TestSurjections(TestCase):
    def test_small(self):
        assert surjection_count((1,), (1,), 2) == 1
        assert surjection_count((1, 1), (1,), 2) == 3
        assert surjection_count((2,), (1,), 3) == 2
        assert surjection_count((1,), (2,), 3) == 0
        assert surjection_count((2, 1), EMPTY, 5) == 1

    def test_automorphisms(self):
        # GL_2(F_2) and (Z/4)^x
        assert automorphism_count((1, 1), 2) == 6
        assert automorphism_count((2,), 2) == 2

class TestInversionCoefficients(TestCase):
    def test_values(self):
        assert inversion_coefficient(EMPTY, (1,), half) == -1
        assert inversion_coefficient((1,), (1,), third) == half
        assert inversion_coefficient((1, 1), (1,), half) == 0

    def test_product_form(self):
        for t in (half, third):
            for mu in enumerate_up_to(8):
                for nu in interval(EMPTY, mu):
                    assert inversion_coefficient(nu, mu, t) == \
                        inversion_coefficient_product(nu, mu, t), (nu, mu, t)

    def test_product_form_off_domain(self):
        t = Fraction(1, 3)
        for nu in enumerate_up_to(3):
            cap = conjugate(nu)[0] + 2
            domain = enumerate_conjugate_interlacing(nu, cap)
            for mu in enumerate_up_to(sum(nu) + 2):
                if mu not in domain:
                    assert inversion_coefficient_product(nu, mu, t) == 0

    def test_cancellation(self):
        assert cancellation_sum((2, 1), (1,), half) == 0
        for t in (half, third, Fraction(2, 5)):
            for lam in enumerate_up_to(8):
                for nu in interval(EMPTY, lam):
                    expected = 1 if nu == lam else 0
                    assert cancellation_sum(lam, nu, t) == expected, (lam, nu, t)

    @settings(max_examples=20, deadline=None)
    @given(st.sampled_from(small), st.integers(min_value=2, max_value=7))
    def test_cancellation_any_t(self, lam, p):
        assert cancellation_sum(lam, lam, Fraction(1, p)) == 1

if __name__ == '__main__':
    main()
