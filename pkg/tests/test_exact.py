"""Exact-arithmetic module: every identity is checked with == on Fractions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bzeta import exact
from oracles import falling_factorial_coeffs, pascal_binomial, stirling2_by_sum


class TestBinomial:
    def test_small_values(self):
        assert exact.binomial(5, 2) == 10
        assert exact.binomial(9, 0) == 1
        assert exact.binomial(3, 7) == 0

    def test_pascal_oracle(self):
        assert exact.binomial(40, 20) == pascal_binomial(40, 20) == 137846528820

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(0, 25), k=st.integers(0, 25))
    def test_matches_pascal_triangle(self, n, k):
        assert exact.binomial(n, k) == pascal_binomial(n, k)


class TestStirlingSecond:
    def test_base_cases(self):
        assert exact.stirling2(0, 0) == 1
        for n in range(1, 8):
            assert exact.stirling2(n, 0) == 0
            assert exact.stirling2(n, n) == 1

    def test_partition_count_oracle(self):
        assert exact.stirling2(4, 2) == stirling2_by_sum(4, 2) == 7

    def test_explicit_sum_equals_triangle(self):
        for n in range(26):
            for k in range(n + 1):
                assert exact.stirling2_explicit(n, k) == exact.stirling2(n, k)


class TestStirlingFirst:
    def test_diagonal(self):
        for n in range(10):
            assert exact.stirling1_signed(n, n) == 1

    def test_falling_factorial_oracle(self):
        # s(n, k) are exactly the coefficients of x(x-1)...(x-n+1).
        for n in range(1, 12):
            coeffs = falling_factorial_coeffs(n)
            for k in range(n + 1):
                assert exact.stirling1_signed(n, k) == coeffs[k]
        assert exact.stirling1_signed(3, 1) == 2
        assert exact.stirling1_signed(4, 2) == 11

    def test_orthogonality_with_second_kind(self):
        for n in range(16):
            for k in range(16):
                acc = sum(
                    exact.stirling1_signed(n, j) * exact.stirling2(j, k)
                    for j in range(16)
                )
                assert acc == (1 if n == k else 0)


class TestBernoulliNumbers:
    def test_first_values(self):
        assert exact.bernoulli_recurrence(0) == 1
        assert exact.bernoulli_recurrence(1) == Fraction(-1, 2)
        assert exact.bernoulli_recurrence(2) == Fraction(1, 6)
        assert exact.bernoulli_recurrence(4) == Fraction(-1, 30)

    def test_twelfth_via_double_sum_oracle(self):
        assert exact.bernoulli_doublesum(12) == Fraction(-691, 2730)
        assert exact.bernoulli_recurrence(12) == Fraction(-691, 2730)

    def test_triple_agreement(self):
        for n in range(41):
            r = exact.bernoulli_recurrence(n)
            assert exact.bernoulli_stirling(n) == r
            assert exact.bernoulli_doublesum(n) == r

    def test_odd_indices_vanish(self):
        for n in range(1, 21):
            assert exact.bernoulli_recurrence(2 * n + 1) == 0

    def test_stirling_route_small_cases(self):
        assert exact.bernoulli_stirling(0) == 1
        assert exact.bernoulli_stirling(1) == Fraction(-1, 2)
        assert exact.bernoulli_stirling(4) == exact.bernoulli_recurrence(4)

    def test_double_sum_small_cases(self):
        assert exact.bernoulli_doublesum(0) == 1
        assert exact.bernoulli_doublesum(2) == Fraction(1, 6)
        assert exact.bernoulli_doublesum(6) == exact.bernoulli_recurrence(6)


class TestBernoulliPoly:
    def test_low_degree_coefficients(self):
        assert exact.bernoulli_poly(0).coeffs == (Fraction(1),)
        assert exact.bernoulli_poly(1).coeffs == (Fraction(-1, 2), Fraction(1))
        assert exact.bernoulli_poly(2).coeffs == (
            Fraction(1, 6),
            Fraction(-1),
            Fraction(1),
        )

    def test_monic_with_bernoulli_constant_term(self):
        for n in range(20):
            p = exact.bernoulli_poly(n)
            assert p.coeffs[n] == 1
            assert p.coeffs[0] == exact.bernoulli_recurrence(n)

    def test_endpoint_values(self):
        for n in range(2, 21):
            p = exact.bernoulli_poly(n)
            bn = exact.bernoulli_recurrence(n)
            assert exact.bernoulli_poly_eval(p, Fraction(0)) == bn
            assert exact.bernoulli_poly_eval(p, Fraction(1)) == bn
        assert exact.bernoulli_at_one(1) == Fraction(1, 2)

    def test_double_sum_route(self):
        assert exact.bernoulli_poly_doublesum(1, Fraction(0)) == Fraction(-1, 2)
        assert exact.bernoulli_poly_doublesum(3, Fraction(1, 2)) == 0
        assert exact.bernoulli_poly_doublesum(2, Fraction(1)) == Fraction(1, 6)

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(0, 10),
        x=st.fractions(min_value=-4, max_value=4, max_denominator=12),
    )
    def test_double_sum_equals_poly_everywhere(self, n, x):
        p = exact.bernoulli_poly(n)
        assert exact.bernoulli_poly_doublesum(n, x) == exact.bernoulli_poly_eval(p, x)


class TestIdentities:
    @pytest.mark.parametrize(
        "n,x",
        [(3, Fraction(2)), (1, Fraction(0)), (5, Fraction(-3))],
    )
    def test_difference_identity_examples(self, n, x):
        assert exact.check_difference_identity(n, x)

    def test_difference_identity_grid(self):
        xs = [Fraction(-2), Fraction(-1, 2), Fraction(0), Fraction(1, 3), Fraction(1), Fraction(7)]
        for n in range(1, 21):
            for x in xs:
                assert exact.check_difference_identity(n, x)

    @settings(max_examples=40, deadline=None)
    @given(
        n=st.integers(1, 12),
        x=st.fractions(min_value=-5, max_value=5, max_denominator=10),
    )
    def test_difference_identity_property(self, n, x):
        assert exact.check_difference_identity(n, x)

    def test_weighted_stirling_sum(self):
        for k in range(1, 21):
            assert exact.check_stirling1_bernoulli_sum(k)

    def test_weighted_stirling_hand_values(self):
        # k = 2: s(2,1) B_1 + s(2,2) B_2 = 1/2 + 1/6 = 2/3 = 2!/3
        acc = (
            exact.stirling1_signed(2, 1) * exact.bernoulli_recurrence(1)
            + exact.stirling1_signed(2, 2) * exact.bernoulli_recurrence(2)
        )
        assert acc == Fraction(2, 3)

    def test_vanishing_difference_lemma(self):
        for n in range(9):
            for k in range(n + 1, 13):
                for x in (Fraction(0), Fraction(1, 2), Fraction(3)):
                    acc = sum(
                        (-1) ** j * exact.binomial(k, j) * (x + j) ** n
                        for j in range(k + 1)
                    )
                    assert acc == 0


class TestSerialization:
    def test_rational_strings(self):
        assert exact.rat_str(Fraction(-691, 2730)) == "-691/2730"
        assert exact.rat_str(Fraction(1)) == "1"
        assert exact.rat_str(Fraction(-1, 2)) == "-1/2"

    def test_poly_json(self):
        assert exact.poly_json(exact.bernoulli_poly(2)) == '["1/6", "-1", "1"]'
