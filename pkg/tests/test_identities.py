import math
from fractions import Fraction

import pytest

from supercongruences.identities import (
    IDENTITIES,
    IdentityBounds,
    harmonic_fractions,
    pochhammer,
    szily_sum,
    verify_all,
    verify_identity,
)

QUICK = IdentityBounds(n_max=30, ij_max=10, rational_ij_max=5)


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(Fraction(7, 3), 0) == 1
        assert pochhammer(1, 3) == 6
        assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)

    def test_factorial_specialization(self):
        for k in range(10):
            assert pochhammer(1, k) == math.factorial(k)


class TestSpotValues:
    def test_b6_at_n3(self):
        # 2 + 5*2 + 8*6 = 60 = 3 * C(6,3)
        assert sum((3 * k + 2) * math.comb(2 * k, k) for k in range(3)) == 60
        assert 3 * math.comb(6, 3) == 60

    def test_von_szily_at_1_1(self):
        assert szily_sum(1, 1) == -1 + 4 - 1 == 2

    def test_d4_at_1_1_x1(self):
        # both sides equal 1/6: lhs = -1/2 + 2/3, rhs = (1)_1 (1)_1 / (1)_3
        lhs = -Fraction(1, 2) + Fraction(2, 3)
        rhs = pochhammer(1, 1) * pochhammer(1, 1) / pochhammer(1, 3)
        assert lhs == rhs == Fraction(1, 6)

    def test_harmonic_fractions(self):
        H = harmonic_fractions(4)
        assert H[4] == Fraction(25, 12)


class TestSuite:
    def test_all_pass_quick_bounds(self):
        for report in verify_all(QUICK):
            assert report.passed, (report.id, report.counterexamples[:3])
            assert report.points_checked > 0

    def test_registry_complete(self):
        assert set(IDENTITIES) == {
            "I-B6", "I-B10", "I-BNEW1", "I-B11", "I-BNEW2", "I-B12",
            "I-D2HS", "I-RIORDAN", "I-D4", "I-D5", "I-D7", "I-D8",
            "I-D9", "I-DNEW2", "I-SEQ",
        }

    def test_unknown_identity(self):
        with pytest.raises(KeyError):
            verify_identity("I-NOPE", QUICK)

    def test_d4_at_x1_reproduces_d5(self):
        # the x = 1 specialization of the partial-fraction identity must agree
        # with the 1/(k+1) form up to the (-1)^(i+j) factor
        from supercongruences.identities import _d4_lhs

        for i in range(6):
            for j in range(6):
                lhs_d5 = Fraction(0)
                for k in range(i, i + j + 1):
                    c = math.comb(k, j) * math.comb(j, k - i)
                    if c:
                        term = Fraction(c, k + 1)
                        lhs_d5 += term if k % 2 == 0 else -term
                assert _d4_lhs(i, j, Fraction(1)) == (-1) ** (i + j) * lhs_d5

    def test_counterexamples_reported(self):
        # a runner yielding a false point must be flagged, not raised
        from supercongruences.identities import IdentityReport

        report = IdentityReport("fake", 1, [((0,), 1, 2)])
        assert not report.passed
