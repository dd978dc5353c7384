"""Prime contexts and canonical residue arithmetic modulo p^e for e in 1..4.

Everything runs on plain Python integers, so p^4-sized products can never
silently wrap; the prime cap below is a memory/time policy for the table
layers, not an arithmetic limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

MAX_EXPONENT = 4

# Tables are sized ~2p entries; beyond this the exact layers are impractical.
MAX_PRIME = 2**31 - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotInvertibleError(ArithmeticError):
    """Inversion of a residue that shares a factor with the modulus."""


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for every n below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = ((d & -d).bit_length()) - 1
    d >>= r
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve_primes(lo: int, hi: int) -> list[int]:
    """All primes in the closed interval [lo, hi], ascending.

    Segmented, so a narrow window high up costs O((hi-lo) + sqrt(hi)) rather
    than O(hi).
    """
    if not 0 <= lo <= hi:
        raise ValueError(f"need 0 <= lo <= hi, got [{lo}, {hi}]")
    if hi < 2:
        return []
    root = math.isqrt(hi)
    small = bytearray([1]) * (root + 1)
    small[0:2] = b"\x00" * min(2, root + 1)
    for i in range(2, math.isqrt(root) + 1):
        if small[i]:
            small[i * i :: i] = b"\x00" * len(small[i * i :: i])
    base = [i for i in range(2, root + 1) if small[i]]

    start = max(lo, 2)
    window = bytearray([1]) * (hi - start + 1)
    for q in base:
        first = max(q * q, ((start + q - 1) // q) * q)
        if first <= hi:
            window[first - start :: q] = b"\x00" * ((hi - first) // q + 1)
    return [start + i for i, flag in enumerate(window) if flag]


@dataclass(frozen=True)
class PrimeContext:
    """A prime p >= 5 together with the working moduli p, p^2, p^3, p^4.

    p = 2 and p = 3 are rejected at construction: the congruences under test
    all assume 2, 3, and 6 are invertible.
    """

    p: int
    moduli: tuple[int, int, int, int] = field(init=False, repr=False, compare=False)
    p_mod_3: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p = self.p
        if p > MAX_PRIME:
            raise ValueError(f"p={p} exceeds the supported cap MAX_PRIME={MAX_PRIME}")
        if p < 5 or not _is_prime(p):
            raise ValueError(f"p={p} is not a prime >= 5")
        object.__setattr__(self, "moduli", (p, p * p, p**3, p**4))
        object.__setattr__(self, "p_mod_3", p % 3)

    def modulus(self, exponent: int) -> int:
        """p^exponent for exponent in 1..4."""
        if not 1 <= exponent <= MAX_EXPONENT:
            raise ValueError(f"exponent must be in 1..{MAX_EXPONENT}, got {exponent}")
        return self.moduli[exponent - 1]

    def residue(self, value: int, exponent: int) -> Residue:
        return Residue(value, exponent, self)


@dataclass(frozen=True)
class Residue:
    """Canonical residue in [0, p^e), the carrier for all congruence checks.

    Values normalize on construction, so negative intermediates like the
    -44 arising from small-p right-hand sides are handled uniformly.
    """

    value: int
    exponent: int
    ctx: PrimeContext

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.ctx.modulus(self.exponent))

    @property
    def modulus(self) -> int:
        return self.ctx.modulus(self.exponent)

    def _coerce(self, other: Residue | int) -> Residue:
        if isinstance(other, int):
            return Residue(other, self.exponent, self.ctx)
        if other.exponent != self.exponent:
            raise ValueError(
                f"exponent mismatch: {self.exponent} vs {other.exponent}"
            )
        if other.ctx.p != self.ctx.p:
            raise ValueError(f"prime mismatch: {self.ctx.p} vs {other.ctx.p}")
        return other

    def __add__(self, other: Residue | int) -> Residue:
        other = self._coerce(other)
        return Residue(self.value + other.value, self.exponent, self.ctx)

    __radd__ = __add__

    def __sub__(self, other: Residue | int) -> Residue:
        other = self._coerce(other)
        return Residue(self.value - other.value, self.exponent, self.ctx)

    def __rsub__(self, other: int) -> Residue:
        return Residue(other - self.value, self.exponent, self.ctx)

    def __mul__(self, other: Residue | int) -> Residue:
        other = self._coerce(other)
        return Residue(self.value * other.value, self.exponent, self.ctx)

    __rmul__ = __mul__

    def __neg__(self) -> Residue:
        return Residue(-self.value, self.exponent, self.ctx)

    def __pow__(self, n: int) -> Residue:
        if n < 0:
            raise ValueError("use inverse() for negative powers")
        return Residue(pow(self.value, n, self.modulus), self.exponent, self.ctx)

    def inverse(self) -> Residue:
        if self.value % self.ctx.p == 0:
            raise NotInvertibleError(
                f"{self.value} is divisible by p={self.ctx.p}, not a unit mod p^{self.exponent}"
            )
        return Residue(pow(self.value, -1, self.modulus), self.exponent, self.ctx)

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.ctx.p}^{self.exponent})"


def mod_mul(a: Residue, b: Residue) -> Residue:
    """(a * b) mod p^e; both operands must share prime and exponent."""
    return a * b


def mod_inverse(a: Residue) -> Residue:
    """b with a*b = 1 mod p^e; raises NotInvertibleError when p | a."""
    return a.inverse()


def mod_pow(a: Residue, n: int) -> Residue:
    """a^n mod p^e for n >= 0 (square-and-multiply via built-in pow)."""
    return a**n


def legendre_p_over_3(ctx: PrimeContext) -> int:
    """The quadratic character of p modulo 3: +1 when p = 1 (mod 3), else -1."""
    return 1 if ctx.p_mod_3 == 1 else -1


def legendre_arg_over_3(m: int) -> int:
    """Character of an arbitrary integer mod 3: 0 when 3 | m, +1 / -1 otherwise."""
    r = m % 3
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def fermat_quotient(a: int, ctx: PrimeContext) -> Residue:
    """(a^(p-1) - 1)/p mod p; the division is exact by Fermat's little theorem."""
    p = ctx.p
    if a % p == 0:
        raise NotInvertibleError(f"{a} is divisible by p={p}")
    q, r = divmod(pow(a, p - 1, p * p) - 1, p)
    if r:  # cannot happen for a coprime to p
        raise ArithmeticError(f"Fermat quotient division inexact for a={a}, p={p}")
    return Residue(q, 1, ctx)


def iverson(condition: bool) -> int:
    """1 if the assertion holds, else 0."""
    return 1 if condition else 0


def batch_inverse(values: Sequence[int], modulus: int) -> list[int]:
    """Inverses of many units mod `modulus` with a single modular inversion.

    Montgomery's trick: prefix products, one pow(-1), then a backward sweep.
    Every entry must be a unit.
    """
    n = len(values)
    prefix = [1] * (n + 1)
    for i, v in enumerate(values):
        prefix[i + 1] = prefix[i] * v % modulus
    try:
        acc = pow(prefix[n], -1, modulus)
    except ValueError as exc:
        raise NotInvertibleError(f"non-unit among values mod {modulus}") from exc
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = acc * prefix[i] % modulus
        acc = acc * values[i] % modulus
    return out
