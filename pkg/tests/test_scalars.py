import math
from fractions import Fraction

import pytest

from mzvlab.errors import ContractViolation
from mzvlab.scalars import (
    bernoulli,
    beta,
    binom,
    convolve,
    dim_cusp,
    even_series_coeff,
    hal_series,
    laurent_combo_coeff,
    odd_series_coeff,
    parse_rat,
    rat_str,
    series_coeffs,
)


def oracle_bernoulli_list(n):
    """Independent route: solve sum_{k<=m} C(m+1,k) B_k = 0 directly."""
    out = [Fraction(1)]
    for m in range(1, n + 1):
        s = sum(math.comb(m + 1, k) * out[k] for k in range(m))
        out.append(-s / Fraction(m + 1))
    return out


def oracle_cusp_series(kmax):
    """Expand x^12 * (sum x^{4a}) * (sum x^{6b}) by direct convolution."""
    a = [1 if i % 4 == 0 else 0 for i in range(kmax + 1)]
    b = [1 if i % 6 == 0 else 0 for i in range(kmax + 1)]
    prod = [0] * (kmax + 1)
    for i in range(kmax + 1):
        if a[i]:
            for j in range(kmax + 1 - i):
                prod[i + j] += b[j]
    return [0] * 12 + prod[: kmax - 11]


class TestBernoulli:
    def test_fixtures(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_vanish(self):
        for n in range(3, 41, 2):
            assert bernoulli(n) == 0

    def test_against_recurrence_oracle(self):
        oracle = oracle_bernoulli_list(30)
        for n in range(31):
            assert bernoulli(n) == oracle[n]

    def test_negative_rejected(self):
        with pytest.raises(ContractViolation):
            bernoulli(-1)


class TestBeta:
    def test_fixtures(self):
        assert beta(0) == Fraction(-1, 2)
        assert beta(3) == 0
        assert beta(2) == Fraction(-1, 24)

    def test_even_values_against_factorials(self):
        for k in range(0, 61, 2):
            assert beta(k) == -bernoulli(k) / (2 * math.factorial(k))

    def test_odd_zero(self):
        for k in range(1, 61, 2):
            assert beta(k) == 0


class TestBinom:
    def test_conventions(self):
        assert binom(2, 7) == 0
        assert binom(5, -1) == 0
        assert binom(4, 2) == 6

    def test_matches_math_comb(self):
        for m in range(0, 140):
            for n in range(0, m + 1):
                assert binom(m, n) == math.comb(m, n)

    def test_pascal(self):
        for m in range(1, 60):
            for n in range(1, m):
                assert binom(m, n) == binom(m - 1, n - 1) + binom(m - 1, n)


class TestDimCusp:
    def test_fixtures(self):
        assert dim_cusp(12) == 1
        assert dim_cusp(11) == 0
        assert dim_cusp(24) == 2

    def test_against_series_oracle(self):
        oracle = oracle_cusp_series(40)
        got = [0] + [dim_cusp(k) for k in range(1, 41)]
        assert got == oracle

    def test_against_closed_form(self):
        for k in range(4, 80, 2):
            expect = k // 12 - 1 if k % 12 == 2 else k // 12
            assert dim_cusp(k) == max(expect, 0)

    def test_domain(self):
        with pytest.raises(ContractViolation):
            dim_cusp(0)


class TestSeries:
    def test_basic_coeffs(self):
        assert [odd_series_coeff(k) for k in range(8)] == [0, 0, 0, 1, 0, 1, 0, 1]
        assert [even_series_coeff(k) for k in range(8)] == [0, 0, 1, 0, 1, 0, 1, 0]

    def test_series_coeffs_lists(self):
        assert series_coeffs("S", 14)[12] == 1
        with pytest.raises(ContractViolation):
            series_coeffs("X", 4)

    def test_convolve(self):
        assert convolve([1, 1, 0], [1, 0, 2]) == [1, 1, 2]

    def test_combo_fixtures(self):
        # kernel-dimension targets at the first interesting weights
        assert laurent_combo_coeff("SE/x^2", 10) == 0
        assert laurent_combo_coeff("SE/x^2", 12) == 1
        assert laurent_combo_coeff("SE/x^2", 14) == 1
        assert laurent_combo_coeff("SE", 14) == 1
        assert laurent_combo_coeff("SE/x^2+(x+1/x)SO", 12) == 1
        assert laurent_combo_coeff("SE/x^2+(x+1/x)SO", 14) == 2
        assert laurent_combo_coeff("(x+1/x)OS", 12) == 0
        assert laurent_combo_coeff("(x+1/x)OS", 16) == 2
        with pytest.raises(ContractViolation):
            laurent_combo_coeff("nope", 10)

    def test_hal_series_depth3_identity(self):
        # E*O^2 - E*S must match the named combo coefficientwise
        row = hal_series(3, 40)
        for k in range(41):
            assert row[k] == laurent_combo_coeff("EO^2-ES", k)
        with pytest.raises(ContractViolation):
            hal_series(4, 10)


class TestRatStr:
    def test_round_trip(self):
        for x in [Fraction(3, 4), Fraction(-5), Fraction(0), Fraction(22, 7)]:
            assert parse_rat(rat_str(x)) == x
        assert rat_str(Fraction(5, 1)) == "5"
        assert rat_str(Fraction(-2, 3)) == "-2/3"
