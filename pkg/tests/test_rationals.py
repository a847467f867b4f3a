from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from psiq import (
    ArgumentClass,
    PoleError,
    classify,
    eval_closed_form,
    harmonic,
    parse_rational,
    psi_closed,
    reduce,
    shift_decompose,
)
from psiq.numerics import comparison_tolerance

from conftest import random_rationals


class TestReduce:
    def test_gcd_cancellation(self):
        assert reduce(2, 4) == Fraction(1, 2)

    def test_already_reduced(self):
        assert reduce(-7, 3) == Fraction(-7, 3)

    def test_sign_normalization(self):
        r = reduce(6, -4)
        assert r == Fraction(-3, 2)
        assert r.denominator == 2 and r.numerator == -3

    def test_zero_denominator(self):
        with pytest.raises(ValueError, match="undefined rational"):
            reduce(1, 0)

    @given(st.integers(-10**9, 10**9), st.integers(-10**6, 10**6).filter(lambda d: d != 0))
    def test_reduce_idempotent(self, num, den):
        r = reduce(num, den)
        assert reduce(r.numerator, r.denominator) == r
        assert r.denominator >= 1


class TestParse:
    @pytest.mark.parametrize(
        "text,expected",
        [("-7/3", Fraction(-7, 3)), ("1/2", Fraction(1, 2)), ("4", Fraction(4)),
         ("-1", Fraction(-1)), (" 6/4 ", Fraction(3, 2)), ("0", Fraction(0))],
    )
    def test_valid(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/2/3", "1.5", "--1", "1/-2", "/3"])
    def test_malformed(self, text):
        with pytest.raises(ValueError, match="malformed rational"):
            parse_rational(text)

    def test_zero_denominator(self):
        with pytest.raises(ValueError, match="undefined rational"):
            parse_rational("7/0")


class TestClassify:
    @pytest.mark.parametrize(
        "r,expected",
        [
            (Fraction(0), ArgumentClass.POLE),
            (Fraction(-3), ArgumentClass.POLE),
            (Fraction(1), ArgumentClass.ONE),
            (Fraction(2), ArgumentClass.POSITIVE_INTEGER),
            (Fraction(1, 2), ArgumentClass.UNIT_INTERVAL),
            (Fraction(7, 3), ArgumentClass.GREATER_THAN_ONE),
            (Fraction(-7, 3), ArgumentClass.NEGATIVE_NON_INTEGER),
        ],
    )
    def test_examples(self, r, expected):
        assert classify(r) is expected

    @given(st.integers(-10**6, 10**6), st.integers(-10**4, 10**4).filter(lambda d: d != 0))
    def test_depends_only_on_value(self, num, den):
        assert classify(reduce(num, den)) is classify(reduce(3 * num, 3 * den))

    @given(st.fractions(min_value=-100, max_value=100, max_denominator=50))
    def test_exhaustive_and_exclusive(self, r):
        c = classify(r)
        is_pole = r.denominator == 1 and r <= 0
        assert (c is ArgumentClass.POLE) == is_pole


class TestShiftDecompose:
    def test_seven_thirds(self):
        sd = shift_decompose(Fraction(7, 3))
        assert sd.base == Fraction(1, 3)
        assert sd.correction == Fraction(15, 4)
        assert sd.step_count == 2

    def test_negative_seven_thirds(self):
        sd = shift_decompose(Fraction(-7, 3))
        assert sd.base == Fraction(2, 3)
        assert sd.correction == Fraction(117, 28)
        assert sd.step_count == 3

    def test_identity_on_unit_interval(self):
        sd = shift_decompose(Fraction(1, 2))
        assert (sd.base, sd.correction, sd.step_count) == (Fraction(1, 2), 0, 0)

    def test_one_is_its_own_base(self):
        sd = shift_decompose(Fraction(1))
        assert (sd.base, sd.correction, sd.step_count) == (Fraction(1), 0, 0)

    def test_positive_integer_gives_harmonic_correction(self):
        sd = shift_decompose(Fraction(5))
        assert sd.base == 1
        assert sd.correction == harmonic(4)
        assert sd.step_count == 4

    def test_pole_rejected(self):
        with pytest.raises(PoleError):
            shift_decompose(Fraction(-2))

    @given(st.fractions(min_value=-50, max_value=50, max_denominator=40))
    def test_base_in_unit_interval_and_consistent(self, r):
        if classify(r) is ArgumentClass.POLE:
            return
        sd = shift_decompose(r)
        assert 0 < sd.base <= 1
        assert sd.step_count >= 0
        # the base differs from the input by exactly step_count unit shifts
        assert abs(r - sd.base) == sd.step_count
        # recompute the correction by its defining sum
        if r > 1:
            expected = sum(
                (Fraction(1, 1) / (sd.base + k) for k in range(sd.step_count)),
                Fraction(0),
            )
        else:
            expected = -sum(
                (Fraction(1, 1) / (r + k) for k in range(sd.step_count)), Fraction(0)
            )
        assert sd.correction == expected

    def test_defining_identity_numerically(self, ctx30):
        tol = comparison_tolerance(ctx30)
        for r in random_rationals(30, seed=4207):
            sd = shift_decompose(r)
            lhs = eval_closed_form(psi_closed(r), ctx30)
            rhs = eval_closed_form(psi_closed(sd.base), ctx30) + ctx30.from_fraction(
                sd.correction
            )
            assert abs(lhs - rhs) < tol


class TestHarmonic:
    def test_first_values(self):
        assert harmonic(1) == Fraction(1)
        assert harmonic(3) == Fraction(11, 6)

    def test_h10_against_direct_sum(self):
        direct = sum((Fraction(1, k) for k in range(1, 11)), Fraction(0))
        assert direct == Fraction(7381, 2520)
        assert harmonic(10) == direct

    def test_difference_property(self):
        for n in range(2, 101):
            assert harmonic(n) - harmonic(n - 1) == Fraction(1, n)

    def test_requires_positive(self):
        with pytest.raises(ValueError):
            harmonic(0)
