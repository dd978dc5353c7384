"""Motzkin numbers, central trinomial coefficients, Catalan numbers, harmonic numbers.

Exact big-integer generation is the default route into the residue tables;
the recurrences divide exactly over the integers, which sidesteps the modular
division by p-divisible factors (n+3 = p in the Motzkin recurrence, n = p in
the trinomial one).  A modular route via the alternating binomial sums

    M_n = sum_k (-1)^(n+k) C(n,k) Cat(k+1)
    T_n = sum_k (-1)^(n+k) C(n,k) C(2k,k)

is available as the large-p alternative and as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .factorials import FactorialTable
from .residues import PrimeContext, batch_inverse

# Exact values grow like 3^n; beyond this cap only the modular route is allowed.
EXACT_GENERATION_LIMIT = 10_000

_motzkin: list[int] = [1, 1]
_trinomial: list[int] = [1, 1]


def motzkin_exact(n_max: int) -> list[int]:
    """M_0..M_n_max as exact integers: 1, 1, 2, 4, 9, 21, 51, 127, ..."""
    if n_max > EXACT_GENERATION_LIMIT:
        raise ValueError(
            f"n_max={n_max} exceeds EXACT_GENERATION_LIMIT={EXACT_GENERATION_LIMIT}; "
            "use the modular route"
        )
    while len(_motzkin) <= n_max:
        n = len(_motzkin)
        num = (2 * n + 1) * _motzkin[n - 1] + 3 * (n - 1) * _motzkin[n - 2]
        q, r = divmod(num, n + 2)
        assert r == 0, f"Motzkin recurrence division inexact at n={n}"
        _motzkin.append(q)
    return _motzkin[: n_max + 1]


def trinomial_exact(n_max: int) -> list[int]:
    """T_0..T_n_max as exact integers: 1, 1, 3, 7, 19, 51, 141, ..."""
    if n_max > EXACT_GENERATION_LIMIT:
        raise ValueError(
            f"n_max={n_max} exceeds EXACT_GENERATION_LIMIT={EXACT_GENERATION_LIMIT}; "
            "use the modular route"
        )
    while len(_trinomial) <= n_max:
        n = len(_trinomial)
        num = (2 * n - 1) * _trinomial[n - 1] + 3 * (n - 1) * _trinomial[n - 2]
        q, r = divmod(num, n)
        assert r == 0, f"trinomial recurrence division inexact at n={n}"
        _trinomial.append(q)
    return _trinomial[: n_max + 1]


@dataclass(frozen=True)
class SequenceTables:
    """Residues mod p^e of M_k, T_k, Cat_k, C(2k, k) for 0 <= k <= p-1."""

    ctx: PrimeContext
    exponent: int
    motzkin: tuple[int, ...]
    trinomial: tuple[int, ...]
    catalan: tuple[int, ...]
    central_binomial: tuple[int, ...]


@dataclass(frozen=True)
class HarmonicTable:
    """H_n = 1 + 1/2 + ... + 1/n mod p for 0 <= n <= p-1 (exponent 1 only)."""

    ctx: PrimeContext
    values: tuple[int, ...] = field(repr=False)


def _pascal_rows(p: int, modulus: int):
    """Yield row n of Pascal's triangle mod `modulus` for n = 0..p-1."""
    row = [1]
    for n in range(p):
        yield n, row
        nxt = [1] * (n + 2)
        for k in range(1, n + 1):
            nxt[k] = (row[k - 1] + row[k]) % modulus
        row = nxt


def build_sequence_tables(
    ctx: PrimeContext, exponent: int, mode: str = "exact"
) -> SequenceTables:
    """Tables of M, T, Cat, C(2k,k) mod p^e over k in [0, p-1].

    mode="exact" reduces the big-integer sequences (requires p within
    EXACT_GENERATION_LIMIT); mode="modular" evaluates the alternating binomial
    sums entirely in residue arithmetic, O(p^2) but constant memory per prime.
    """
    p = ctx.p
    m = ctx.modulus(exponent)
    table = FactorialTable(ctx, exponent, 2 * p)
    cb = [table.binomial_residue(2 * k, k) for k in range(p)]
    cat = [table.catalan(k).reduce().value for k in range(p)]

    if mode == "exact":
        if p - 1 > EXACT_GENERATION_LIMIT:
            raise ValueError(
                f"p={p} too large for exact generation (cap {EXACT_GENERATION_LIMIT}); "
                "pass mode='modular'"
            )
        motzkin = tuple(x % m for x in motzkin_exact(p - 1))
        trinomial = tuple(x % m for x in trinomial_exact(p - 1))
    elif mode == "modular":
        cat_next = [table.catalan(k).reduce().value for k in range(p + 1)]
        motzkin_l = [0] * p
        trinomial_l = [0] * p
        for n, row in _pascal_rows(p, m):
            ms = 0
            ts = 0
            for k in range(n + 1):
                if (n + k) % 2 == 0:
                    ms += row[k] * cat_next[k + 1]
                    ts += row[k] * cb[k]
                else:
                    ms -= row[k] * cat_next[k + 1]
                    ts -= row[k] * cb[k]
            motzkin_l[n] = ms % m
            trinomial_l[n] = ts % m
        motzkin = tuple(motzkin_l)
        trinomial = tuple(trinomial_l)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    return SequenceTables(ctx, exponent, motzkin, trinomial, tuple(cat), tuple(cb))


def build_harmonic_table(ctx: PrimeContext) -> HarmonicTable:
    """Prefix sums of modular inverses: H_0 = 0, H_n = H_(n-1) + 1/n mod p."""
    p = ctx.p
    inv = batch_inverse(list(range(1, p)), p)
    values = [0] * p
    acc = 0
    for n in range(1, p):
        acc = (acc + inv[n - 1]) % p
        values[n] = acc
    return HarmonicTable(ctx, tuple(values))


@dataclass
class CrosscheckReport:
    """Per-n agreement of the alternative closed forms with the tables."""

    p: int
    exponent: int
    checked: int
    failures: list[tuple[int, str]]

    @property
    def ok(self) -> bool:
        return not self.failures


def sequence_crosscheck(
    ctx: PrimeContext, exponent: int, mode: str = "exact"
) -> CrosscheckReport:
    """Verify, for every n < p, that all the inter-expressions agree mod p^e.

    Motzkin: recurrence table vs binomial-Catalan sum, binomial inversion
    against Cat_(n+1), and the alternating Catalan sum.  Trinomial: recurrence
    table vs central-binomial sum and the alternating sum.
    """
    p = ctx.p
    m = ctx.modulus(exponent)
    tables = build_sequence_tables(ctx, exponent, mode=mode)
    table = FactorialTable(ctx, exponent, 2 * p)
    cat = [table.catalan(k).reduce().value for k in range(p + 1)]
    cb = tables.central_binomial
    M, T = tables.motzkin, tables.trinomial

    failures: list[tuple[int, str]] = []
    for n, row in _pascal_rows(p, m):
        forms = {
            "motzkin-binomial-catalan": sum(
                row[2 * k] * cat[k] for k in range(n // 2 + 1)
            )
            % m,
            "motzkin-alternating": sum(
                (row[k] * cat[k + 1] if (n + k) % 2 == 0 else -row[k] * cat[k + 1])
                for k in range(n + 1)
            )
            % m,
            "trinomial-binomial": sum(row[2 * k] * cb[k] for k in range(n // 2 + 1))
            % m,
            "trinomial-alternating": sum(
                (row[k] * cb[k] if (n + k) % 2 == 0 else -row[k] * cb[k])
                for k in range(n + 1)
            )
            % m,
        }
        if forms["motzkin-binomial-catalan"] != M[n]:
            failures.append((n, "motzkin-binomial-catalan"))
        if forms["motzkin-alternating"] != M[n]:
            failures.append((n, "motzkin-alternating"))
        if sum(row[k] * M[k] for k in range(n + 1)) % m != cat[n + 1]:
            failures.append((n, "catalan-inversion"))
        if forms["trinomial-binomial"] != T[n]:
            failures.append((n, "trinomial-binomial"))
        if forms["trinomial-alternating"] != T[n]:
            failures.append((n, "trinomial-alternating"))
    return CrosscheckReport(p, exponent, p, failures)
