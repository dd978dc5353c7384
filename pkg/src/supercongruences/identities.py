"""Exact integer/rational verification of the combinatorial identities.

Everything here runs over arbitrary-precision integers and Fractions with no
modulus anywhere, which makes this module the independent oracle for the
residue-arithmetic layers: any identity used to justify a congruence check is
re-verified exactly on a parameter grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

comb = math.comb


@dataclass(frozen=True)
class IdentityBounds:
    """Parameter ranges: n-style identities sweep n <= n_max, grid identities
    sweep i, j <= ij_max, and the rational-function identity uses i, j <=
    rational_ij_max with 2(i+j)+2 sample points plus `extra_samples`."""

    n_max: int = 100
    ij_max: int = 25
    rational_ij_max: int = 10
    extra_samples: int = 2


@dataclass(frozen=True)
class IdentityDefinition:
    id: str
    description: str
    parameters: str
    runner: Callable[[IdentityBounds], Iterator[tuple[object, object, object]]]


@dataclass
class IdentityReport:
    id: str
    points_checked: int
    counterexamples: list[tuple[object, object, object]]

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def pochhammer(x: Fraction | int, k: int) -> Fraction:
    """Rising factorial x(x+1)...(x+k-1), with the empty product equal to 1."""
    out = Fraction(1)
    for t in range(k):
        out *= x + t
    return out


def catalan_int(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def harmonic_fractions(n_max: int) -> list[Fraction]:
    """H_0..H_n_max as exact rationals."""
    out = [Fraction(0)]
    for k in range(1, n_max + 1):
        out.append(out[-1] + Fraction(1, k))
    return out


def szily_sum(i: int, j: int) -> int:
    """Alternating convolution sum_k (-1)^k C(2i, i+k) C(2j, j+k), k over +-min(i,j)."""
    lim = min(i, j)
    total = 0
    for k in range(-lim, lim + 1):
        term = comb(2 * i, i + k) * comb(2 * j, j + k)
        total += term if k % 2 == 0 else -term
    return total


def _szily_ratio(i: int, j: int) -> Fraction:
    return Fraction(comb(2 * i, i) * comb(2 * j, j), comb(i + j, i))


IDENTITIES: dict[str, IdentityDefinition] = {}


def _register(id: str, description: str, parameters: str):
    def deco(fn):
        IDENTITIES[id] = IdentityDefinition(id, description, parameters, fn)
        return fn

    return deco


@_register("I-B6", "sum_{k<n} (3k+2) C(2k,k) == n C(2n,n)", "n")
def _run_b6(bounds: IdentityBounds):
    for n in range(bounds.n_max + 1):
        lhs = sum((3 * k + 2) * comb(2 * k, k) for k in range(n))
        yield n, lhs, n * comb(2 * n, n)


def _weighted_harmonic_sums(n: int, H: list[Fraction]):
    """The three left-hand sums sharing the (-4)^k C(n,k) H_k kernel."""
    plain = Fraction(0)
    weighted = Fraction(0)
    divided = Fraction(0)
    for k in range(n + 1):
        term = (-4) ** k * comb(n, k) * H[k]
        plain += term
        weighted += k * term
        divided += Fraction(term, k + 1)
    return plain, weighted, divided


@_register(
    "I-B10",
    "sum_k (-4)^k C(n,k) H_k == (-3)^n (H_n - sum_k 1/(k(-3)^k))",
    "n",
)
def _run_b10(bounds: IdentityBounds):
    H = harmonic_fractions(bounds.n_max)
    for n in range(bounds.n_max + 1):
        plain, _, _ = _weighted_harmonic_sums(n, H)
        inner = sum(Fraction(1, k * (-3) ** k) for k in range(1, n + 1))
        yield n, plain, (-3) ** n * (H[n] - inner)


@_register(
    "I-BNEW1",
    "sum_k (-4)^k k C(n,k) H_k == (1-(-3)^n)/3 + (4n(-3)^n/3)(H_n - sum_k 1/(k(-3)^k))",
    "n",
)
def _run_bnew1(bounds: IdentityBounds):
    H = harmonic_fractions(bounds.n_max)
    for n in range(bounds.n_max + 1):
        _, weighted, _ = _weighted_harmonic_sums(n, H)
        inner = sum(Fraction(1, k * (-3) ** k) for k in range(1, n + 1))
        rhs = Fraction(1 - (-3) ** n, 3) + Fraction(4 * n * (-3) ** n, 3) * (
            H[n] - inner
        )
        yield n, weighted, rhs


@_register(
    "I-B11",
    "sum_k (-4)^k/(k+1) C(n,k) H_k == "
    "((3(-3)^n - 1) H_n - 3(-3)^n sum 1/(k(-3)^k) + sum (-3)^k/k) / (4(n+1))",
    "n",
)
def _run_b11(bounds: IdentityBounds):
    H = harmonic_fractions(bounds.n_max)
    for n in range(bounds.n_max + 1):
        _, _, divided = _weighted_harmonic_sums(n, H)
        inner = sum(Fraction(1, k * (-3) ** k) for k in range(1, n + 1))
        geo = sum(Fraction((-3) ** k, k) for k in range(1, n + 1))
        rhs = Fraction(1, 4 * (n + 1)) * (
            (-1 + 3 * (-3) ** n) * H[n] - 3 * (-3) ** n * inner + geo
        )
        yield n, divided, rhs


@_register(
    "I-BNEW2",
    "sum_k (-4)^k k C(n,k) H_k == (1-(-3)^n)/3 + (4n/3) sum_k (-4)^k C(n,k) H_k",
    "n",
)
def _run_bnew2(bounds: IdentityBounds):
    H = harmonic_fractions(bounds.n_max)
    for n in range(bounds.n_max + 1):
        plain, weighted, _ = _weighted_harmonic_sums(n, H)
        yield n, weighted, Fraction(1 - (-3) ** n, 3) + Fraction(4 * n, 3) * plain


@_register(
    "I-B12",
    "sum_k (-4)^k/(k+1) C(n,k) H_k rewritten through sum_k (-4)^k C(n,k) H_k",
    "n",
)
def _run_b12(bounds: IdentityBounds):
    H = harmonic_fractions(bounds.n_max)
    for n in range(bounds.n_max + 1):
        plain, _, divided = _weighted_harmonic_sums(n, H)
        inner = sum(Fraction(1, k * (-3) ** k) for k in range(1, n + 1))
        geo = sum(Fraction((-3) ** k, k) for k in range(1, n + 1))
        rhs = Fraction(1, 4 * (n + 1)) * (
            Fraction(3 * ((-3) ** n + 1), (-3) ** n) * plain
        ) + Fraction(1, 4 * (n + 1)) * (3 * inner + geo - 4 * H[n])
        yield n, divided, rhs


@_register("I-D2HS", "sum_{k<n} C(k,m) == C(n,m+1)", "n,m")
def _run_d2hs(bounds: IdentityBounds):
    for n in range(bounds.n_max + 1):
        for m in range(n + 1):
            yield (n, m), sum(comb(k, m) for k in range(n)), comb(n, m + 1)


@_register(
    "I-RIORDAN",
    "C(k,i) C(k,j) == sum_l C(l+i,j) C(j,l) C(k,l+i)",
    "i,j,k",
)
def _run_riordan(bounds: IdentityBounds):
    for i in range(bounds.ij_max + 1):
        for j in range(bounds.ij_max + 1):
            for k in range(2 * bounds.ij_max + 1):
                rhs = sum(
                    comb(l + i, j) * comb(j, l) * comb(k, l + i) for l in range(j + 1)
                )
                yield (i, j, k), comb(k, i) * comb(k, j), rhs


def _d4_lhs(i: int, j: int, x: Fraction) -> Fraction:
    total = Fraction(0)
    for k in range(i + j + 1):
        c = comb(k, j) * comb(j, k - i) if i <= k <= i + j else 0
        if not c:
            continue
        term = Fraction(c, 1) / (x + k)
        total += term if (i + j + k) % 2 == 0 else -term
    return total


def _d4_samples(i: int, j: int, count: int) -> Iterator[Fraction]:
    """Non-pole sample points; the poles are the integers 0, -1, ..., -(i+j)."""
    produced = 0
    t = 0
    while produced < count:
        t += 1
        for x in (Fraction(t), Fraction(2 * t - 1, 2), Fraction(-(2 * t - 1), 2)):
            if produced >= count:
                break
            if x.denominator == 1 and -(i + j) <= x <= 0:
                continue
            produced += 1
            yield x


@_register(
    "I-D4",
    "sum_k (-1)^(i+j+k)/(x+k) C(k,j) C(j,k-i) == (x)_i (x)_j / (x)_{i+j+1}",
    "i,j,x",
)
def _run_d4(bounds: IdentityBounds):
    lim = bounds.rational_ij_max
    for i in range(lim + 1):
        for j in range(lim + 1):
            count = 2 * (i + j) + 2 + bounds.extra_samples
            for x in _d4_samples(i, j, count):
                rhs = pochhammer(x, i) * pochhammer(x, j) / pochhammer(x, i + j + 1)
                yield (i, j, x), _d4_lhs(i, j, x), rhs


@_register(
    "I-D5",
    "sum_k (-1)^k/(k+1) C(k,j) C(j,k-i) == (-1)^(i+j) / ((i+j+1) C(i+j,j))",
    "i,j",
)
def _run_d5(bounds: IdentityBounds):
    for i in range(bounds.ij_max + 1):
        for j in range(bounds.ij_max + 1):
            lhs = Fraction(0)
            for k in range(i, i + j + 1):
                c = comb(k, j) * comb(j, k - i)
                if c:
                    lhs += Fraction(c, k + 1) if k % 2 == 0 else -Fraction(c, k + 1)
            rhs = Fraction((-1) ** (i + j), (i + j + 1) * comb(i + j, j))
            yield (i, j), lhs, rhs


@_register(
    "I-D7",
    "C(2i,i) C(2j,j) / C(i+j,i) == sum_k (-1)^k C(2i,i+k) C(2j,j+k)",
    "i,j",
)
def _run_d7(bounds: IdentityBounds):
    for i in range(bounds.ij_max + 1):
        for j in range(bounds.ij_max + 1):
            yield (i, j), _szily_ratio(i, j), Fraction(szily_sum(i, j))


@_register("I-D8", "4 S(i,j) == S(i+1,j) + S(i,j+1)", "i,j")
def _run_d8(bounds: IdentityBounds):
    for i in range(bounds.ij_max + 1):
        for j in range(bounds.ij_max + 1):
            lhs = 4 * _szily_ratio(i, j)
            yield (i, j), lhs, _szily_ratio(i + 1, j) + _szily_ratio(i, j + 1)


@_register(
    "I-D9",
    "Cat(i+1) Cat(j+1) / ((i+j+1) C(i+j,j)) == (i+j+2) S(i+1,j+1) / ((i+1)(j+1)(i+2)(j+2))",
    "i,j",
)
def _run_d9(bounds: IdentityBounds):
    for i in range(bounds.ij_max + 1):
        for j in range(bounds.ij_max + 1):
            lhs = Fraction(
                catalan_int(i + 1) * catalan_int(j + 1),
                (i + j + 1) * comb(i + j, j),
            )
            rhs = (
                (i + j + 2)
                * _szily_ratio(i + 1, j + 1)
                / ((i + 1) * (j + 1) * (i + 2) * (j + 2))
            )
            yield (i, j), lhs, rhs


@_register(
    "I-DNEW2",
    "S(i,j) == 2 sum_{k=1..j} (-1)^k C(2i,i+k) C(2j,j+k) + C(2i,i) C(2j,j)",
    "i,j",
)
def _run_dnew2(bounds: IdentityBounds):
    for i in range(bounds.ij_max + 1):
        for j in range(bounds.ij_max + 1):
            folded = comb(2 * i, i) * comb(2 * j, j)
            for k in range(1, j + 1):
                term = 2 * comb(2 * i, i + k) * comb(2 * j, j + k)
                folded += term if k % 2 == 0 else -term
            yield (i, j), _szily_ratio(i, j), Fraction(folded)


@_register(
    "I-SEQ",
    "Motzkin/Catalan/trinomial inter-expressions (binomial, inverse, alternating forms)",
    "n",
)
def _run_seq(bounds: IdentityBounds):
    from .sequences import motzkin_exact, trinomial_exact

    M = motzkin_exact(bounds.n_max)
    T = trinomial_exact(bounds.n_max)
    for n in range(bounds.n_max + 1):
        yield (n, "motzkin-binomial-catalan"), M[n], sum(
            comb(n, 2 * k) * catalan_int(k) for k in range(n // 2 + 1)
        )
        yield (n, "catalan-inversion"), catalan_int(n + 1), sum(
            comb(n, k) * M[k] for k in range(n + 1)
        )
        yield (n, "trinomial-binomial"), T[n], sum(
            comb(n, 2 * k) * comb(2 * k, k) for k in range(n // 2 + 1)
        )
        yield (n, "motzkin-alternating"), M[n], sum(
            (-1) ** (n + k) * comb(n, k) * catalan_int(k + 1) for k in range(n + 1)
        )
        yield (n, "trinomial-alternating"), T[n], sum(
            (-1) ** (n + k) * comb(n, k) * comb(2 * k, k) for k in range(n + 1)
        )


def verify_identity(
    identity_id: str, bounds: IdentityBounds | None = None
) -> IdentityReport:
    """Exact check of one registered identity over its parameter grid."""
    if identity_id not in IDENTITIES:
        raise KeyError(f"unknown identity {identity_id!r}")
    bounds = bounds or IdentityBounds()
    points = 0
    bad: list[tuple[object, object, object]] = []
    for params, lhs, rhs in IDENTITIES[identity_id].runner(bounds):
        points += 1
        if lhs != rhs:
            bad.append((params, lhs, rhs))
    return IdentityReport(identity_id, points, bad)


def verify_all(bounds: IdentityBounds | None = None) -> list[IdentityReport]:
    return [verify_identity(identity_id, bounds) for identity_id in IDENTITIES]
