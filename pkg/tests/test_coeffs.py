import math
from fractions import Fraction

import pytest

from mzvlab.coeffs import (
    b_coeff,
    c_coeff,
    e_coeff,
    h_coeff,
    index_set,
    j_pattern,
    lambda_coeff,
    tau,
)
from mzvlab.errors import ContractViolation
from mzvlab.scalars import beta, binom

# Printed weight-11 and weight-13 depth-2 matrices (rows/cols ascending lex).
B11 = [
    [0, 0, 0, -2],
    [-6, 0, -4, -4],
    [-15, -21, -20, -6],
    [-36, -126, -84, -8],
]
B13 = [
    [0, 0, 0, 0, -2],
    [-6, 0, 0, -4, -4],
    [-15, -15, -6, -20, -6],
    [-28, -78, -84, -56, -8],
    [-55, -330, -462, -165, -10],
]
# Printed 6x6 depth-3 matrix at weight 12, all almost-totally-odd columns (j=3).
C12_3 = [
    [0, 0, 0, 0, 0, 4],
    [0, 0, 12, 0, 8, 8],
    [0, 0, 42, 0, 70, 12],
    [0, 0, 12, 20, 8, -12],
    [60, 100, 64, -20, 16, -24],
    [42, 70, 42, 0, 0, -30],
]


class TestIndexSet:
    def test_weight10_ooe(self):
        assert index_set(10, "ooe").members == ((3, 3, 4), (3, 5, 2), (5, 3, 2))

    def test_weight11_oe(self):
        assert index_set(11, "oe").members == ((3, 8), (5, 6), (7, 4), (9, 2))

    def test_extended_oe(self):
        assert index_set(5, "oe0").members == ((3, 2), (5, 0))
        assert index_set(3, "oe0").members == ((3, 0),)

    def test_extended_ooe(self):
        hat = index_set(12, "ooe0").members
        plain = index_set(12, "ooe").members
        assert set(plain) < set(hat)
        assert all(n[2] == 0 for n in set(hat) - set(plain))

    def test_cardinality_independent_of_j(self):
        for k in range(8, 31, 2):
            sizes = {len(index_set(k, j_pattern(j))) for j in (1, 2, 3)}
            assert len(sizes) == 1

    def test_sorted_and_constrained(self):
        s = index_set(20, "aae")
        assert list(s.members) == sorted(s.members)
        for n1, n2, n3 in s:
            assert n1 >= 2 and n2 >= 2 and n3 >= 2 and n3 % 2 == 0
            assert n1 + n2 + n3 == 20

    def test_empty_set_is_valid(self):
        assert index_set(6, "ooe").members == ()

    def test_bad_pattern(self):
        with pytest.raises(ContractViolation):
            index_set(10, "xyz")


class TestBCoeff:
    def oracle(self, n, n2, m):
        def c(a, b):
            return math.comb(a, b) if 0 <= b <= a else 0

        return (-1) ** n * c(m - 1, n - 1) + (-1) ** (n2 - m) * c(m - 1, n2 - 1)

    def test_fixtures(self):
        assert b_coeff(3, 2, 3) == -3
        assert b_coeff(9, 2, 3) == -2
        assert b_coeff(5, 6, 3) + b_coeff(6, 5, 3) == 0

    def test_against_direct_formula(self):
        for m in range(1, 12):
            for n in range(-3, 14):
                for n2 in range(-3, 14):
                    assert b_coeff(n, n2, m) == self.oracle(n, n2, m)

    def test_odd_m_antisymmetry(self):
        for m in range(3, 16, 2):
            for n in range(0, 14):
                for n2 in range(0, 14):
                    assert b_coeff(n, n2, m) + b_coeff(n2, n, m) == 0


class TestECoeff:
    def test_depth1_is_delta(self):
        assert e_coeff((5,), (5,)) == 1
        assert e_coeff((5,), (3,)) == 0

    def test_fixtures(self):
        assert e_coeff((3, 8), (3, 8)) == 0
        assert e_coeff((3, 3, 6), (3, 3, 6)) == 0

    def test_printed_weight11(self):
        idx = index_set(11, "oe").members
        for i, m in enumerate(idx):
            for k, n in enumerate(idx):
                assert e_coeff(m, n) == B11[i][k]

    def test_printed_weight13(self):
        idx = index_set(13, "oe").members
        for i, m in enumerate(idx):
            for k, n in enumerate(idx):
                assert e_coeff(m, n) == B13[i][k]

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            e_coeff((3, 8), (3, 3, 5))


class TestCCoeff:
    def test_fixtures(self):
        assert c_coeff((3, 3, 6), (7, 3, 2)) == 4
        assert c_coeff((3, 3, 6), (3, 3, 6)) == 0
        assert c_coeff((3, 3, 6), (5, 5, 2)) == 0

    def test_printed_weight12_full(self):
        idx = index_set(12, "ooe").members
        for i, m in enumerate(idx):
            for k, n in enumerate(idx):
                assert c_coeff(m, n) == C12_3[i][k]

    def test_weight_mismatch(self):
        with pytest.raises(ContractViolation):
            c_coeff((3, 3, 6), (3, 3, 4))

    def test_bad_m_pattern(self):
        with pytest.raises(ContractViolation):
            c_coeff((2, 4, 6), (3, 3, 6))


class TestHCoeff:
    def test_diagonal_fixture(self):
        assert h_coeff((3, 3, 6), (3, 3, 6)) == 0

    def test_all_binomials_out_of_range(self):
        # far-apart tuples: every delta and binomial term vanishes
        assert h_coeff((2, 2, 20), (11, 11, 2)) == 0

    def test_corollary_factorization_weight12(self):
        # c(m, n) = sum over I_k(aae) of e((m1,m2),(k1,k2)) delta(m3,k3) h(K, n)
        k = 12
        aae = index_set(k, "aae").members
        rows = index_set(k, "ooe").members
        for j in (1, 2, 3):
            cols = index_set(k, j_pattern(j)).members
            for m in rows:
                for n in cols:
                    rhs = sum(
                        e_coeff((m[0], m[1]), (K[0], K[1])) * h_coeff(K, n)
                        for K in aae
                        if K[2] == m[2]
                    )
                    assert c_coeff(m, n) == rhs

    def test_weight_mismatch(self):
        with pytest.raises(ContractViolation):
            h_coeff((3, 3, 6), (3, 3, 4))


class TestTau:
    def test_even_weight_fixtures(self):
        assert tau(2, 4) == Fraction(-4, 3)
        assert tau(4, 2) == Fraction(25, 12)

    def test_odd_weight_fixture(self):
        # closed form: (-1)^(n1+1)/2 * ((-1)^n1 + C(4,1) + C(4,2))
        assert tau(2, 3) == Fraction(-11, 2)

    def test_double_shuffle_spot(self):
        assert tau(2, 4) + tau(4, 2) + 1 == Fraction(7, 4)
        assert Fraction(7, 4) == beta(2) * beta(4) / beta(6)

    def test_domain(self):
        with pytest.raises(ContractViolation):
            tau(0, 3)


class TestLambda:
    def oracle_odd(self, r, s):
        """Independent evaluation of the odd-odd closed form."""
        k = r + s
        val = Fraction(-1, 12) * (1 + binom(k - 1, s - 1) - binom(k - 1, s))
        conv = sum(
            binom(j - 1, s - 1) * beta(j) * beta(k - j) for j in range(2, k + 1)
        )
        return val + conv / (3 * beta(k))

    def test_odd_form_matches(self):
        assert lambda_coeff(3, 9) == self.oracle_odd(3, 9)
        for k in range(4, 30, 2):
            for s in range(1, k, 2):
                assert lambda_coeff(k - s, s) == self.oracle_odd(k - s, s)

    def test_antisymmetry_odd_pairs(self):
        for k in range(4, 42, 2):
            for s in range(1, k, 2):
                assert lambda_coeff(k - s, s) + lambda_coeff(s, k - s) == 0

    def test_relation_to_tau(self):
        # lambda = -tau - 1/2 + beta_r beta_s / (3 beta_{r+s})
        for k in range(4, 42, 2):
            for r in range(1, k):
                s = k - r
                expect = -tau(r, s) - Fraction(1, 2) + beta(r) * beta(s) / (3 * beta(k))
                assert lambda_coeff(r, s) == expect

    def test_odd_total_weight_rejected(self):
        with pytest.raises(ContractViolation):
            lambda_coeff(2, 3)
