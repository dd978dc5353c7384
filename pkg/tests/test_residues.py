import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercongruences.residues import (
    MAX_PRIME,
    NotInvertibleError,
    PrimeContext,
    Residue,
    batch_inverse,
    fermat_quotient,
    iverson,
    legendre_arg_over_3,
    legendre_p_over_3,
    mod_inverse,
    mod_mul,
    mod_pow,
    sieve_primes,
)

SMALL_PRIMES = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 97, 101, 199]


def _trial_division_primes(lo, hi):
    out = []
    for n in range(max(lo, 2), hi + 1):
        d = 2
        while d * d <= n:
            if n % d == 0:
                break
            d += 1
        else:
            out.append(n)
    return out


class TestSieve:
    def test_examples(self):
        assert sieve_primes(1, 20) == [2, 3, 5, 7, 11, 13, 17, 19]
        assert sieve_primes(5, 5) == [5]
        assert sieve_primes(24, 28) == []

    def test_matches_trial_division(self):
        assert sieve_primes(0, 10_000) == _trial_division_primes(0, 10_000)
        # spot windows further out
        for lo, hi in [(99_000, 100_000), (31_397, 31_469)]:
            assert sieve_primes(lo, hi) == _trial_division_primes(lo, hi)

    def test_bad_range(self):
        with pytest.raises(ValueError):
            sieve_primes(10, 5)
        with pytest.raises(ValueError):
            sieve_primes(-1, 5)


class TestPrimeContext:
    def test_moduli(self):
        ctx = PrimeContext(7)
        assert ctx.moduli == (7, 49, 343, 2401)
        assert ctx.modulus(4) == 2401
        assert ctx.p_mod_3 == 1

    @pytest.mark.parametrize("bad", [2, 3, 4, 6, 9, 1, 0, 25])
    def test_rejects_non_primes_and_small(self, bad):
        with pytest.raises(ValueError):
            PrimeContext(bad)

    def test_rejects_above_cap(self):
        with pytest.raises(ValueError):
            PrimeContext(MAX_PRIME + 100)

    def test_rejects_bad_exponent(self):
        ctx = PrimeContext(5)
        with pytest.raises(ValueError):
            ctx.modulus(5)
        with pytest.raises(ValueError):
            ctx.modulus(0)


class TestResidueArithmetic:
    def setup_method(self):
        self.ctx = PrimeContext(5)

    def r(self, v, e=2):
        return Residue(v, e, self.ctx)

    def test_mod_mul_examples(self):
        assert mod_mul(self.r(7), self.r(8)).value == 6
        assert mod_mul(self.r(0), self.r(17)).value == 0
        assert mod_mul(self.r(24), self.r(24)).value == 1

    def test_exponent_mismatch(self):
        with pytest.raises(ValueError):
            mod_mul(self.r(2, 1), self.r(2, 2))

    def test_prime_mismatch(self):
        other = Residue(2, 2, PrimeContext(7))
        with pytest.raises(ValueError):
            mod_mul(self.r(2), other)

    def test_mod_inverse_examples(self):
        assert mod_inverse(self.r(3)).value == 17
        for e in (1, 2, 3, 4):
            assert mod_inverse(self.r(1, e)).value == 1
        with pytest.raises(NotInvertibleError):
            mod_inverse(self.r(5))

    def test_mod_pow_examples(self):
        assert mod_pow(self.r(2), 0).value == 1
        assert mod_pow(self.r(2), 10).value == 24
        ctx7 = PrimeContext(7)
        assert mod_pow(Residue(3, 2, ctx7), 6).value == 729 % 49 == 43

    def test_normalization_of_negatives(self):
        assert self.r(-44).value == (-44) % 25
        assert (self.r(3) - self.r(7)).value == 21


class TestLegendre:
    def test_p_over_3(self):
        assert legendre_p_over_3(PrimeContext(7)) == 1
        assert legendre_p_over_3(PrimeContext(5)) == -1
        assert legendre_p_over_3(PrimeContext(13)) == 1

    def test_arg_over_3(self):
        assert legendre_arg_over_3(6) == 0
        assert legendre_arg_over_3(4) == 1
        assert legendre_arg_over_3(-1) == -1

    def test_period_and_zero(self):
        p = 31
        for k in range(1, 3 * p):
            assert legendre_arg_over_3(p - k) == legendre_arg_over_3(p - k - 3)
        assert legendre_arg_over_3(p - p) == 0


class TestFermatQuotient:
    def test_examples(self):
        ctx = PrimeContext(5)
        assert fermat_quotient(2, ctx).value == 3
        assert fermat_quotient(3, ctx).value == 1
        for p in SMALL_PRIMES:
            assert fermat_quotient(1, PrimeContext(p)).value == 0

    def test_divisible_base_rejected(self):
        with pytest.raises(NotInvertibleError):
            fermat_quotient(10, PrimeContext(5))

    @settings(max_examples=150, deadline=None)
    @given(
        a=st.integers(2, 50),
        b=st.integers(2, 50),
        p=st.sampled_from(SMALL_PRIMES),
    )
    def test_logarithm_property(self, a, b, p):
        ctx = PrimeContext(p)
        if a % p == 0 or b % p == 0:
            return
        qa = fermat_quotient(a, ctx).value
        qb = fermat_quotient(b, ctx).value
        qab = fermat_quotient(a * b, ctx).value
        assert qab == (qa + qb) % p


class TestIverson:
    def test_examples(self):
        assert iverson(True) == 1
        assert iverson(False) == 0
        assert iverson(6 % 3 == 0) == 1


class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(
        value=st.integers(1, 10**6),
        e=st.integers(1, 4),
        p=st.sampled_from(SMALL_PRIMES),
    )
    def test_unit_times_inverse_is_one(self, value, e, p):
        ctx = PrimeContext(p)
        if value % p == 0:
            return
        a = Residue(value, e, ctx)
        assert mod_mul(a, mod_inverse(a)).value == 1

    def test_batch_inverse(self):
        m = 7**3
        values = [v for v in range(1, 200) if v % 7]
        inv = batch_inverse(values, m)
        assert all(v * i % m == 1 for v, i in zip(values, inv))
        with pytest.raises(NotInvertibleError):
            batch_inverse([1, 7], m)
