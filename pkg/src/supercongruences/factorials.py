"""Factorials, binomials, and Catalan numbers mod p^e with explicit p-adic valuation.

A quantity divisible by p is useless as a plain residue mod p^e once its
valuation reaches e.  Carrying the pair (valuation, p-free unit) instead keeps
every factorial ratio exact: n! = p^v * u with u a unit mod p^e means the
integer n! is known modulo p^(e+v), which is exactly enough precision for any
ratio whose final valuation is >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .residues import NotInvertibleError, PrimeContext, Residue, batch_inverse

# Memory policy for table construction (three int lists per table).
MAX_TABLE_ENTRIES = 50_000_000


class NegativeValuationError(ArithmeticError):
    """Reducing a valued residue whose represented value is not a p-integer."""


def split_p_power(n: int, p: int) -> tuple[int, int]:
    """v_p(n) and the p-free part of n, for n != 0 (sign stays on the unit)."""
    if n == 0:
        raise ValueError("0 has no finite p-adic valuation")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


@dataclass(frozen=True)
class ValuedResidue:
    """A value p^valuation * unit with the unit coprime to p.

    The valuation may go negative through division; that is fine for
    intermediate ratios and only rejected at reduce() time.
    """

    valuation: int
    unit: Residue

    def __post_init__(self) -> None:
        if self.unit.value % self.unit.ctx.p == 0:
            raise ValueError("unit part must be coprime to p")

    @classmethod
    def from_int(cls, n: int, ctx: PrimeContext, exponent: int) -> ValuedResidue:
        v, part = split_p_power(n, ctx.p)
        return cls(v, Residue(part, exponent, ctx))

    @property
    def ctx(self) -> PrimeContext:
        return self.unit.ctx

    @property
    def exponent(self) -> int:
        return self.unit.exponent

    def __mul__(self, other: ValuedResidue) -> ValuedResidue:
        return ValuedResidue(self.valuation + other.valuation, self.unit * other.unit)

    def __truediv__(self, other: ValuedResidue) -> ValuedResidue:
        return ValuedResidue(
            self.valuation - other.valuation, self.unit * other.unit.inverse()
        )

    def reduce(self) -> Residue:
        """Collapse to a plain residue mod p^e; requires valuation >= 0."""
        if self.valuation < 0:
            raise NegativeValuationError(
                f"valuation {self.valuation} < 0: value is not an integer at p"
            )
        if self.valuation >= self.exponent:
            return Residue(0, self.exponent, self.ctx)
        return self.unit * self.ctx.p**self.valuation

    def __repr__(self) -> str:
        return f"{self.ctx.p}^{self.valuation} * {self.unit!r}"


class FactorialTable:
    """(v_p(n!), unit part of n! mod p^e) for all 0 <= n <= limit.

    The unit parts multiply up in one O(limit) pass; their inverses come from
    a single batched inversion, so binomial lookups cost three multiplications
    and no pow() calls.
    """

    def __init__(self, ctx: PrimeContext, exponent: int, limit: int):
        if limit < 0:
            raise ValueError("limit must be nonnegative")
        if limit + 1 > MAX_TABLE_ENTRIES:
            raise ValueError(
                f"table of {limit + 1} entries exceeds MAX_TABLE_ENTRIES={MAX_TABLE_ENTRIES}"
            )
        self.ctx = ctx
        self.exponent = exponent
        self.limit = limit
        m = ctx.modulus(exponent)
        self._modulus = m
        p = ctx.p
        units = [1] * (limit + 1)
        valuations = [0] * (limit + 1)
        u, v = 1, 0
        for n in range(1, limit + 1):
            part = n
            while part % p == 0:
                part //= p
                v += 1
            u = u * part % m
            units[n] = u
            valuations[n] = v
        self.unit_parts = units
        self.valuations = valuations

    @cached_property
    def inverse_unit_parts(self) -> list[int]:
        """Inverses of the factorial unit parts, one pow() for the whole table."""
        m = self._modulus
        p = self.ctx.p
        inv = [1] * (self.limit + 1)
        acc = pow(self.unit_parts[self.limit], -1, m)
        for n in range(self.limit, 0, -1):
            inv[n] = acc
            part = n
            while part % p == 0:
                part //= p
            acc = acc * part % m
        return inv

    def _check_range(self, n: int, lo: int = 0) -> None:
        if not lo <= n <= self.limit:
            raise ValueError(f"index {n} outside table range [{lo}, {self.limit}]")

    def factorial(self, n: int) -> ValuedResidue:
        self._check_range(n)
        return ValuedResidue(
            self.valuations[n], Residue(self.unit_parts[n], self.exponent, self.ctx)
        )

    def binomial(self, n: int, k: int) -> ValuedResidue:
        """C(n, k) as a valued residue; requires 0 <= k <= n <= limit."""
        self._check_range(n)
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
        m = self._modulus
        v = self.valuations[n] - self.valuations[k] - self.valuations[n - k]
        u = (
            self.unit_parts[n]
            * self.inverse_unit_parts[k]
            % m
            * self.inverse_unit_parts[n - k]
            % m
        )
        return ValuedResidue(v, Residue(u, self.exponent, self.ctx))

    def binomial_residue(self, n: int, k: int) -> int:
        """Canonical value of C(n, k) mod p^e, with C(n, k) = 0 for k out of range."""
        self._check_range(n)
        if k < 0 or k > n:
            return 0
        v = self.valuations[n] - self.valuations[k] - self.valuations[n - k]
        if v >= self.exponent:
            return 0
        m = self._modulus
        u = (
            self.unit_parts[n]
            * self.inverse_unit_parts[k]
            % m
            * self.inverse_unit_parts[n - k]
            % m
        )
        return u * self.ctx.p**v % m

    def central_binomial(self, k: int) -> ValuedResidue:
        """C(2k, k) as a valued residue."""
        return self.binomial(2 * k, k)

    def catalan(self, k: int) -> ValuedResidue:
        """C(2k, k)/(k+1); valuation stays >= 0 since Catalan numbers are integers."""
        cb = self.binomial(2 * k, k)
        v, part = split_p_power(k + 1, self.ctx.p)
        out = ValuedResidue(
            cb.valuation - v,
            cb.unit * pow(part, -1, self._modulus),
        )
        if out.valuation < 0:
            raise NegativeValuationError(f"Catalan number {k} came out non-integral")
        return out


def build_factorial_table(
    ctx: PrimeContext, exponent: int, limit: int | None = None
) -> FactorialTable:
    """Factorial table for [0, limit]; the default limit 2p+2 covers C(2p+2, p+1)."""
    if limit is None:
        limit = 2 * ctx.p + 2
    return FactorialTable(ctx, exponent, limit)


def valued_binomial(table: FactorialTable, n: int, k: int) -> ValuedResidue:
    return table.binomial(n, k)


def central_binomial(table: FactorialTable, k: int) -> ValuedResidue:
    return table.central_binomial(k)


def catalan(table: FactorialTable, k: int) -> ValuedResidue:
    return table.catalan(k)


def kummer_carries(n: int, k: int, p: int) -> int:
    """Carries when adding k and n-k in base p (equals v_p(C(n, k)))."""
    carries = 0
    carry = 0
    a, b = k, n - k
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries
