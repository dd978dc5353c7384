"""Executable catalogue of congruence checks over residue systems mod p^e.

Each check pairs a left-hand sum with a right-hand closed form and compares
canonical residues exactly.  Families:

* ``single``        one congruence per prime
* ``per_k``         a congruence for every k in a stated range
* ``parameterized`` a congruence per auxiliary parameter (x, or a grid (i, j))

The heavy sums are evaluated through factorial unit/valuation tables, so a
binomial lookup is three modular multiplications and quantities divisible by
p never lose exactness.  The triple sums come in two independently coded
routes: an O(p^2) reduction through per-k inner sums and a naive O(p^3)
oracle built directly on ``math.comb``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable

from .factorials import FactorialTable, NegativeValuationError, ValuedResidue
from .residues import (
    PrimeContext,
    Residue,
    batch_inverse,
    fermat_quotient,
    iverson,
    legendre_arg_over_3,
    legendre_p_over_3,
)
from .sequences import (
    EXACT_GENERATION_LIMIT,
    HarmonicTable,
    SequenceTables,
    build_harmonic_table,
    build_sequence_tables,
)


class UnknownCheckError(ValueError):
    """Lookup of a check id that is not in the registry."""


def alpha(k: int, ctx: PrimeContext) -> int:
    """2(-1)^k + 3[3 | p-k]; period 6 in k."""
    return 2 * (-1) ** (k & 1) + 3 * iverson((ctx.p - k) % 3 == 0)


def beta(i: int, ctx: PrimeContext) -> int:
    """(-1)^i (3[3 | p-i] - 1); period 6 in i."""
    return (-1) ** (i & 1) * (3 * iverson((ctx.p - i) % 3 == 0) - 1)


# Prefix sums of (alpha - 1) over one period, keyed by (p mod 3, k mod 6).
_OMEGA_TABLE = {
    1: (0, 0, 1, -2, 2, -1),
    2: (0, -3, 1, -2, -1, -1),
}


def omega(k: int, ctx: PrimeContext) -> int:
    """sum_{i<=k} (alpha(i) - 1) via the period-6 closed table."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _OMEGA_TABLE[ctx.p_mod_3][k % 6]


def omega_prefix_sum(k: int, ctx: PrimeContext) -> int:
    """Direct prefix-sum definition of omega (the oracle for the closed table)."""
    return sum(alpha(i, ctx) - 1 for i in range(1, k + 1))


def psi(m: int, ctx: PrimeContext) -> int:
    """sum_{k<=m} k ((p-k)/3), computed directly and checked against the
    closed form; a mismatch means an implementation bug."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    p = ctx.p
    direct = sum(k * legendre_arg_over_3(p - k) for k in range(1, m + 1))
    closed = psi_closed_form(m, ctx)
    if direct != closed:
        raise ArithmeticError(
            f"psi closed form mismatch at m={m}, p={p}: {direct} != {closed}"
        )
    return direct


def psi_closed_form(m: int, ctx: PrimeContext) -> int:
    """Closed form of psi; the p = 2 (mod 3) branch mirrors the p = 1 one."""
    if ctx.p_mod_3 == 1:
        return (m + 1) // 3 - (m + 1) * iverson(m % 3 == 2)
    return (m + 2) // 3 - m * iverson(m % 3 == 0)


def szily_s(table: FactorialTable, i: int, j: int) -> ValuedResidue:
    """S(i, j) = C(2i,i) C(2j,j) / C(i+j,i) as a valued residue.

    S is an integer (it equals an alternating convolution of central
    binomials), so a negative valuation here is an internal error.
    """
    out = table.central_binomial(i) * table.central_binomial(j) / table.binomial(i + j, i)
    if out.valuation < 0:
        raise NegativeValuationError(f"S({i},{j}) produced negative valuation")
    return out


@dataclass(frozen=True)
class CheckDefinition:
    id: str
    exponent: int
    family: str
    description: str
    extended: bool
    evaluator: Callable = field(repr=False, compare=False)


@dataclass
class CheckResult:
    """Outcome of one check at one prime.

    For per_k / parameterized families ``lhs``/``rhs`` hold the first failing
    point, or the first point when everything passed; every failing point is
    collected in ``sub_failures`` as (parameter, lhs, rhs).
    """

    id: str
    p: int
    exponent: int
    lhs: Residue
    rhs: Residue
    passed: bool
    sub_failures: list[tuple[str, int, int]]
    elapsed: float


class PrimeWorkspace:
    """Per-prime lazy caches shared by the check evaluators.

    Tables are immutable once built, so a workspace can be shared read-only;
    the harness builds one workspace per prime per worker process.
    """

    def __init__(self, ctx: PrimeContext, options: dict | None = None):
        self.ctx = ctx
        self.options = dict(options or {})
        self._fact: dict[int, FactorialTable] = {}
        self._seq: dict[int, SequenceTables] = {}
        self._harm: HarmonicTable | None = None
        self._ints: dict[int, tuple[list[int], list[int]]] = {}
        self._chi: int | None = None
        self._q: dict[int, int] = {}

    def factorials(self, exponent: int) -> FactorialTable:
        if exponent not in self._fact:
            self._fact[exponent] = FactorialTable(
                self.ctx, exponent, 2 * self.ctx.p + 2
            )
        return self._fact[exponent]

    def sequence_tables(self, exponent: int) -> SequenceTables:
        if exponent not in self._seq:
            mode = "exact" if self.ctx.p <= EXACT_GENERATION_LIMIT else "modular"
            self._seq[exponent] = build_sequence_tables(self.ctx, exponent, mode=mode)
        return self._seq[exponent]

    def harmonic(self) -> HarmonicTable:
        if self._harm is None:
            self._harm = build_harmonic_table(self.ctx)
        return self._harm

    def int_units(self, exponent: int) -> tuple[list[int], list[int]]:
        """(valuation, inverted p-free part) of n for 1 <= n <= 2p+2."""
        if exponent not in self._ints:
            p = self.ctx.p
            m = self.ctx.modulus(exponent)
            top = 2 * p + 2
            valn = [0] * (top + 1)
            parts = [1] * (top + 1)
            for n in range(1, top + 1):
                v, part = 0, n
                while part % p == 0:
                    part //= p
                    v += 1
                valn[n] = v
                parts[n] = part % m
            inv = [0] + batch_inverse(parts[1:], m)
            self._ints[exponent] = (valn, inv)
        return self._ints[exponent]

    @property
    def chi(self) -> int:
        """The character (p/3) in {+1, -1}."""
        if self._chi is None:
            self._chi = legendre_p_over_3(self.ctx)
        return self._chi

    def fermat_q(self, a: int) -> int:
        """q_p(a) = (a^(p-1)-1)/p mod p, cached."""
        if a not in self._q:
            self._q[a] = fermat_quotient(a, self.ctx).value
        return self._q[a]

    def frac(self, exponent: int, num: int, den: int = 1) -> int:
        """Canonical residue of num/den mod p^e (den must be a unit)."""
        m = self.ctx.modulus(exponent)
        out = num % m
        if den != 1:
            out = out * pow(den % m, -1, m) % m
        return out


REGISTRY: dict[str, CheckDefinition] = {}


def _register(id: str, exponent: int, family: str, description: str, extended=False):
    def deco(fn):
        REGISTRY[id] = CheckDefinition(id, exponent, family, description, extended, fn)
        return fn

    return deco


def core_check_ids() -> list[str]:
    return [d.id for d in REGISTRY.values() if not d.extended]


def extended_check_ids() -> list[str]:
    return [d.id for d in REGISTRY.values() if d.extended]


def eval_check(check_id: str, ws: PrimeWorkspace, exponent: int | None = None) -> CheckResult:
    """Evaluate one registered check at one prime; never raises on failure."""
    defn = REGISTRY.get(check_id)
    if defn is None:
        raise UnknownCheckError(f"unknown check id {check_id!r}")
    e = defn.exponent if exponent is None else exponent
    if not 1 <= e <= 4:
        raise ValueError(f"exponent must be in 1..4, got {e}")
    start = time.perf_counter()
    items = defn.evaluator(ws, e)
    elapsed = time.perf_counter() - start
    failures = [(str(param), lhs, rhs) for param, lhs, rhs in items if lhs != rhs]
    if failures:
        _, flhs, frhs = failures[0]
        lhs, rhs = int(flhs), int(frhs)
    else:
        _, lhs, rhs = items[0]
    ctx = ws.ctx
    return CheckResult(
        id=check_id,
        p=ctx.p,
        exponent=e,
        lhs=Residue(lhs, e, ctx),
        rhs=Residue(rhs, e, ctx),
        passed=not failures,
        sub_failures=failures,
        elapsed=elapsed,
    )


def _require_mod_p(check_id: str, e: int) -> None:
    if e != 1:
        raise ValueError(f"{check_id} is a mod-p statement; exponent overrides are not supported")


# --- main supercongruences -------------------------------------------------


@_register("A1", 2, "single", "sum_{k<p} (2k+1) M_k^2 == 12 p (p/3)  (mod p^2)")
def _a1(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    M = ws.sequence_tables(e).motzkin
    lhs = sum((2 * k + 1) * x * x for k, x in enumerate(M)) % m
    return [(None, lhs, 12 * ws.ctx.p * ws.chi % m)]


@_register("A2", 2, "single", "sum_{k<p} M_k^2 == (p/3)(2 - 6p)  (mod p^2)")
def _a2(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    M = ws.sequence_tables(e).motzkin
    lhs = sum(x * x for x in M) % m
    return [(None, lhs, ws.chi * (2 - 6 * ws.ctx.p) % m)]


@_register("A3", 2, "single", "sum_{k<p} k M_k^2 == (p/3)(9p - 1)  (mod p^2)")
def _a3(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    M = ws.sequence_tables(e).motzkin
    lhs = sum(k * x * x for k, x in enumerate(M)) % m
    return [(None, lhs, ws.chi * (9 * ws.ctx.p - 1) % m)]


@_register(
    "A4", 2, "single",
    "sum_{k<p} T_k M_k == (4/3)(p/3) + (p/6)(1 - 9(p/3))  (mod p^2)",
)
def _a4(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    st = ws.sequence_tables(e)
    lhs = sum(t * x for t, x in zip(st.trinomial, st.motzkin)) % m
    rhs = (ws.frac(e, 4, 3) * ws.chi + ws.ctx.p * ws.frac(e, 1, 6) * (1 - 9 * ws.chi)) % m
    return [(None, lhs, rhs)]


# --- Wolstenholme and Lehmer ------------------------------------------------


@_register("B1", 3, "single", "C(2p-1, p-1) == 1  (mod p^3)")
def _b1(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    return [(None, ws.factorials(e).binomial_residue(2 * p - 1, p - 1), 1 % m)]


@_register("B2", 3, "single", "C(2p, p) == 2  (mod p^3)")
def _b2(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    return [(None, ws.factorials(e).binomial_residue(2 * p, p), 2 % m)]


@_register(
    "BL1", 1, "single",
    "H_[p/6] == H_[5p/6] == -2 q_p(2) - (3/2) q_p(3)  (mod p)",
)
def _bl1(ws: PrimeWorkspace, e: int):
    _require_mod_p("BL1", e)
    p = ws.ctx.p
    H = ws.harmonic().values
    rhs = (-2 * ws.fermat_q(2) - ws.frac(1, 3, 2) * ws.fermat_q(3)) % p
    return [("H[p/6]", H[p // 6], rhs), ("H[5p/6]", H[5 * p // 6], rhs)]


@_register("BL2", 1, "single", "H_[p/3] == H_[2p/3] == -(3/2) q_p(3)  (mod p)")
def _bl2(ws: PrimeWorkspace, e: int):
    _require_mod_p("BL2", e)
    p = ws.ctx.p
    H = ws.harmonic().values
    rhs = -ws.frac(1, 3, 2) * ws.fermat_q(3) % p
    return [("H[p/3]", H[p // 3], rhs), ("H[2p/3]", H[2 * p // 3], rhs)]


@_register("BL3", 1, "single", "H_[p/2] == -2 q_p(2)  (mod p)")
def _bl3(ws: PrimeWorkspace, e: int):
    _require_mod_p("BL3", e)
    p = ws.ctx.p
    return [("H[p/2]", ws.harmonic().values[p // 2], -2 * ws.fermat_q(2) % p)]


# --- central binomial / Catalan sums ----------------------------------------


@_register("B3", 2, "single", "sum_{k<p} C(2k,k) == (p/3)  (mod p^2)")
def _b3(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    cb = ws.sequence_tables(e).central_binomial
    return [(None, sum(cb) % m, ws.chi % m)]


@_register("B4", 2, "single", "sum_{k<p} Cat_k == (3/2)(p/3) - 1/2  (mod p^2)")
def _b4(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    cat = ws.sequence_tables(e).catalan
    rhs = (ws.frac(e, 3, 2) * ws.chi - ws.frac(e, 1, 2)) % m
    return [(None, sum(cat) % m, rhs)]


@_register("BNEW4", 2, "single", "sum_{1<=k<p} C(2k,k)/k == 0  (mod p^2)")
def _bnew4(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    cb = ws.sequence_tables(e).central_binomial
    _, inv = ws.int_units(e)
    lhs = sum(cb[k] * inv[k] for k in range(1, ws.ctx.p)) % m
    return [(None, lhs, 0)]


@_register("B5", 2, "single", "sum_{k<p} k C(2k,k) == (2/3)(p - (p/3))  (mod p^2)")
def _b5(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    cb = ws.sequence_tables(e).central_binomial
    lhs = sum(k * x for k, x in enumerate(cb)) % m
    return [(None, lhs, ws.frac(e, 2, 3) * (ws.ctx.p - ws.chi) % m)]


@_register("B18", 1, "single", "sum_{k<=p-2} C(2k,k)/(k+1)^2 == 3(p/3) + 1  (mod p)")
def _b18(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    cb = ws.sequence_tables(e).central_binomial
    _, inv = ws.int_units(e)
    lhs = sum(cb[k] * inv[k + 1] % m * inv[k + 1] for k in range(ws.ctx.p - 1)) % m
    return [(None, lhs, (3 * ws.chi + 1) % m)]


@_register("B7", 4, "single", "sum_{k<p} (3k+2) C(2k,k) == 2p  (mod p^4)")
def _b7(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    lhs = sum((3 * k + 2) * ft.binomial_residue(2 * k, k) for k in range(ws.ctx.p)) % m
    return [(None, lhs, 2 * ws.ctx.p % m)]


@_register(
    "BNEW9", 1, "single",
    "sum_{k<=p-2} C(2k,k+1)/(k+1) == -1/2 - (3/2)(p/3)  (mod p)",
)
def _bnew9(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    _, inv = ws.int_units(e)
    lhs = (
        sum(ft.binomial_residue(2 * k, k + 1) * inv[k + 1] for k in range(1, ws.ctx.p - 1))
        % m
    )
    rhs = (-ws.frac(e, 1, 2) - ws.frac(e, 3, 2) * ws.chi) % m
    return [(None, lhs, rhs)]


# --- harmonic-weighted sums --------------------------------------------------


@_register("B8", 1, "single", "sum_{k<p} C(2k,k) H_k == -(p/3) q_p(3)  (mod p)")
def _b8(ws: PrimeWorkspace, e: int):
    _require_mod_p("B8", e)
    p = ws.ctx.p
    cb = ws.sequence_tables(1).central_binomial
    H = ws.harmonic().values
    lhs = sum(c * h for c, h in zip(cb, H)) % p
    return [(None, lhs, -ws.chi * ws.fermat_q(3) % p)]


@_register(
    "BNEW3", 1, "single",
    "sum_{k<p} k C(2k,k) H_k == (1/3)(p/3)((p/3) + 2 q_p(3) - 1)  (mod p)",
)
def _bnew3(ws: PrimeWorkspace, e: int):
    _require_mod_p("BNEW3", e)
    p = ws.ctx.p
    cb = ws.sequence_tables(1).central_binomial
    H = ws.harmonic().values
    lhs = sum(k * c * h for k, (c, h) in enumerate(zip(cb, H))) % p
    rhs = ws.frac(1, 1, 3) * ws.chi * (ws.chi + 2 * ws.fermat_q(3) - 1) % p
    return [(None, lhs, rhs)]


@_register("B9", 1, "single", "sum_{k<p} Cat_k H_k == -(3/2)(p/3) q_p(3)  (mod p)")
def _b9(ws: PrimeWorkspace, e: int):
    _require_mod_p("B9", e)
    p = ws.ctx.p
    cat = ws.sequence_tables(1).catalan
    H = ws.harmonic().values
    lhs = sum(c * h for c, h in zip(cat, H)) % p
    return [(None, lhs, -ws.frac(1, 3, 2) * ws.chi * ws.fermat_q(3) % p)]


@_register(
    "GRANV", 1, "parameterized",
    "sum_{0<j<p} x^j/j == (1 - x^p + (x-1)^p)/p  (mod p), x = 2..10",
)
def _granv(ws: PrimeWorkspace, e: int):
    _require_mod_p("GRANV", e)
    p = ws.ctx.p
    _, inv = ws.int_units(1)
    items = []
    for x in range(2, 11):
        power = 1
        lhs = 0
        for j in range(1, p):
            power = power * x % p
            lhs += power * inv[j]
        num = 1 - x**p + (x - 1) ** p
        quot, rem = divmod(num, p)
        assert rem == 0, "numerator not divisible by p"
        items.append((x, lhs % p, quot % p))
    return items


@_register(
    "B13", 1, "single",
    "sum_{k<=(p-1)/2} (-3)^k/k + 3 sum_{k<=(p-1)/2} 1/(k(-3)^k) "
    "== 3 q_p(3) - 8 q_p(2)  (mod p)",
)
def _b13(ws: PrimeWorkspace, e: int):
    _require_mod_p("B13", e)
    p = ws.ctx.p
    _, inv = ws.int_units(1)
    t = (-3) % p
    it = pow(t, -1, p)
    power, ipower = 1, 1
    lhs = 0
    for k in range(1, (p - 1) // 2 + 1):
        power = power * t % p
        ipower = ipower * it % p
        lhs += power * inv[k] + 3 * ipower * inv[k]
    rhs = (3 * ws.fermat_q(3) - 8 * ws.fermat_q(2)) % p
    return [(None, lhs % p, rhs)]


# --- per-k families (inner sums of the triple sums) --------------------------


@_register("B14", 1, "per_k", "sum_{i<p} C(2i,i+k) == ((p-k)/3)  (mod p), 1<=k<=p")
def _b14(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    ppow = (1,) + ws.ctx.moduli[:3]
    items = []
    for k in range(1, p + 1):
        s = 0
        for i in range(k, p):
            v = fv[2 * i] - fv[i + k] - fv[i - k]
            if v < e:
                s += fu[2 * i] * fiu[i + k] % m * fiu[i - k] % m * ppow[v]
        items.append((k, s % m, legendre_arg_over_3(p - k) % m))
    return items


@_register(
    "B15", 1, "per_k",
    "sum_{0<i<p} C(2i,i+k)/i == (alpha(k)-1)/k  (mod p), 1<=k<=p-1",
)
def _b15(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    _, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    items = []
    for k in range(1, p):
        s = 0
        for i in range(k, p):
            v = fv[2 * i] - fv[i + k] - fv[i - k]
            if v < e:
                s += fu[2 * i] * fiu[i + k] % m * fiu[i - k] % m * ppow[v] * inv[i]
        rhs = (alpha(k, ws.ctx) - 1) * inv[k] % m
        items.append((k, s % m, rhs))
    return items


@_register(
    "B16", 1, "per_k",
    "(-1)^k sum_{0<i<=p-2} C(2i,i+k)/(i+1) == 2k + (3/2)((p/3)-1) "
    "+ sum_{i<k} beta(i) - k sum_{i<k} (beta(i)+2)/i  (mod p), 1<=k<=p",
)
def _b16(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ctx = ws.ctx
    ft = ws.factorials(e)
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    _, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    c32 = ws.frac(e, 3, 2)

    beta_prefix = [0] * p
    beta_inv_prefix = [0] * p
    for i in range(1, p):
        b = beta(i, ctx)
        beta_prefix[i] = beta_prefix[i - 1] + b
        beta_inv_prefix[i] = (beta_inv_prefix[i - 1] + (b + 2) * inv[i]) % m

    items = []
    for k in range(1, p + 1):
        s = 0
        for i in range(k, p - 1):
            v = fv[2 * i] - fv[i + k] - fv[i - k]
            if v < e:
                s += fu[2 * i] * fiu[i + k] % m * fiu[i - k] % m * ppow[v] * inv[i + 1]
        lhs = s % m if k % 2 == 0 else -s % m
        rhs = (
            2 * k + c32 * (ws.chi - 1) + beta_prefix[k - 1] - k * beta_inv_prefix[k - 1]
        ) % m
        items.append((k, lhs, rhs))
    return items


# --- triple sums --------------------------------------------------------------


def _triple_sum_rhs(ws: PrimeWorkspace, check_id: str) -> int:
    p = ws.ctx.p
    chi, q3 = ws.chi, ws.fermat_q(3)
    if check_id == "C1":
        return (chi * (1 - q3) - 1) % p
    if check_id == "C7":
        return -chi * q3 % p
    if check_id == "C10":
        return -ws.frac(1, 1, 3) * (2 + chi * q3) % p
    raise UnknownCheckError(f"no triple sum {check_id!r}")


def reduced_triple_sum(ws: PrimeWorkspace, check_id: str, exponent: int = 1) -> int:
    """O(p^2) route: per-k inner sums over i and j, then a signed combination."""
    p = ws.ctx.p
    e = exponent
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    _, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]

    def binred(n, k):
        v = fv[n] - fv[k] - fv[n - k]
        if v >= e:
            return 0
        return fu[n] * fiu[k] % m * fiu[n - k] % m * ppow[v] % m

    total = 0
    if check_id == "C1":
        for k in range(1, p - 1):
            a = sum(binred(2 * i, i + k) * inv[i] for i in range(k, p)) % m
            b = sum(binred(2 * j, j + k) * inv[j + 1] for j in range(k, p - 1)) % m
            total += a * b if k % 2 == 0 else -a * b
    elif check_id == "C7":
        for k in range(1, p):
            a = sum(binred(2 * i, i + k) * inv[i] for i in range(k, p)) % m
            d = sum(binred(2 * j, j + k) for j in range(k, p)) % m
            total += a * d if k % 2 == 0 else -a * d
    elif check_id == "C10":
        for k in range(1, p):
            ee = sum(binred(2 * i, i + k) * inv[i + 1] for i in range(k, p - 1)) % m
            d = sum(binred(2 * j, j + k) for j in range(k, p)) % m
            total += ee * d if k % 2 == 0 else -ee * d
    else:
        raise UnknownCheckError(f"no triple sum {check_id!r}")
    return total % m


def naive_triple_sum(ctx: PrimeContext, check_id: str) -> int:
    """O(p^3) oracle straight from math.comb; shares no code with the reduction."""
    p = ctx.p
    comb = math.comb
    inv = [0] + batch_inverse(list(range(1, p)), p)
    total = 0
    if check_id == "C1":
        for k in range(1, p - 1):
            sign = 1 if k % 2 == 0 else -1
            for j in range(1, p - 1):
                cj = comb(2 * j, j + k) % p
                if cj == 0:
                    continue
                for i in range(1, p):
                    ci = comb(2 * i, i + k) % p
                    if ci:
                        total += sign * inv[i] * inv[j + 1] % p * cj % p * ci
    elif check_id == "C7":
        for k in range(1, p):
            sign = 1 if k % 2 == 0 else -1
            for i in range(1, p):
                ci = comb(2 * i, i + k) % p
                if ci == 0:
                    continue
                for j in range(p):
                    total += sign * inv[i] * ci % p * (comb(2 * j, j + k) % p)
    elif check_id == "C10":
        for k in range(1, p):
            sign = 1 if k % 2 == 0 else -1
            for i in range(1, p - 1):
                ci = comb(2 * i, i + k) % p
                if ci == 0:
                    continue
                for j in range(p):
                    total += sign * inv[i + 1] * ci % p * (comb(2 * j, j + k) % p)
    else:
        raise UnknownCheckError(f"no triple sum {check_id!r}")
    return total % p


@_register(
    "C1", 1, "single",
    "sum_{k,j,i} (-1)^k C(2j,j+k) C(2i,i+k) / (i(j+1)) == (p/3)(1 - q_p(3)) - 1  (mod p)",
)
def _c1(ws: PrimeWorkspace, e: int):
    _require_mod_p("C1", e)
    return [(None, reduced_triple_sum(ws, "C1"), _triple_sum_rhs(ws, "C1"))]


@_register(
    "C7", 1, "single",
    "sum_{k,i,j} (-1)^k C(2i,i+k) C(2j,j+k) / i == -(p/3) q_p(3)  (mod p)",
)
def _c7(ws: PrimeWorkspace, e: int):
    _require_mod_p("C7", e)
    return [(None, reduced_triple_sum(ws, "C7"), _triple_sum_rhs(ws, "C7"))]


@_register(
    "C10", 1, "single",
    "sum_{k,i,j} (-1)^k C(2i,i+k) C(2j,j+k) / (i+1) == -(2 + (p/3) q_p(3))/3  (mod p)",
)
def _c10(ws: PrimeWorkspace, e: int):
    _require_mod_p("C10", e)
    return [(None, reduced_triple_sum(ws, "C10"), _triple_sum_rhs(ws, "C10"))]


# --- extended proof-step checks ----------------------------------------------


def _reduce_vu(v: int, u: int, e: int, m: int, ppow) -> int:
    if v >= e:
        return 0
    if v < 0:
        raise NegativeValuationError(f"term with valuation {v}")
    return u * ppow[v] % m


DNEW1_GRID_CAP = 40


@_register(
    "DNEW1", 2, "parameterized",
    "sum_{k<p} C(k,i) C(k,j) == p (-1)^(i+j) / ((i+j+1) C(i+j,j))  (mod p^2), grid i<=j",
    extended=True,
)
def _dnew1(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    g = p - 1 if ws.options.get("dnew1_full_grid") else min(p - 1, DNEW1_GRID_CAP)
    ft = ws.factorials(e)
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    valn, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]

    rows = []
    row = [0] * (g + 1)
    row[0] = 1
    for k in range(p):
        rows.append(row)
        nxt = row[:]
        for t in range(min(k + 1, g), 0, -1):
            nxt[t] = (row[t - 1] + row[t]) % m
        row = nxt

    items = []
    for i in range(g + 1):
        for j in range(i, g + 1):
            lhs = sum(r[i] * r[j] for r in rows[j:]) % m
            v = 1 - valn[i + j + 1] - (fv[i + j] - fv[i] - fv[j])
            u = inv[i + j + 1] * (fiu[i + j] * fu[i] % m * fu[j] % m) % m
            rhs = _reduce_vu(v, u, e, m, ppow)
            if (i + j) % 2:
                rhs = -rhs % m
            items.append(((i, j), lhs, rhs))
    return items


def _szily_vu(ft: FactorialTable, m: int, i: int, j: int) -> tuple[int, int]:
    """(valuation, unit) of S(i,j) = (2i)!(2j)! / (i! j! (i+j)!)."""
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    v = fv[2 * i] + fv[2 * j] - fv[i] - fv[j] - fv[i + j]
    u = fu[2 * i] * fu[2 * j] % m * fiu[i] % m * fiu[j] % m * fiu[i + j] % m
    return v, u


@_register(
    "D12", 2, "single",
    "p sum_{j<=p} S(p+1,j)/((p+1)(j+1)) == 12 p (p/3) - 2 - 2p  (mod p^2)",
    extended=True,
)
def _d12(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    valn, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for j in range(1, p + 1):
        v, u = _szily_vu(ft, m, p + 1, j)
        v += 1 - valn[p + 1] - valn[j + 1]
        u = u * inv[p + 1] % m * inv[j + 1] % m
        lhs += _reduce_vu(v, u, e, m, ppow)
    rhs = (12 * p * ws.chi - 2 - 2 * p) % m
    return [(None, lhs % m, rhs)]


@_register(
    "D13", 2, "single",
    "p sum_{j<=p} S(1,j)/(j+1) == 6 p (p/3) - 2  (mod p^2)",
    extended=True,
)
def _d13(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    valn, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for j in range(1, p + 1):
        v, u = _szily_vu(ft, m, 1, j)
        v += 1 - valn[j + 1]
        u = u * inv[j + 1] % m
        lhs += _reduce_vu(v, u, e, m, ppow)
    rhs = (6 * p * ws.chi - 2) % m
    return [(None, lhs % m, rhs)]


@_register(
    "D14", 2, "single",
    "2p sum S(i,j)/((i+1)(j+1)) - p sum S(i,j)/(i(j+1)) == 2p(3(p/3) - 1)  (mod p^2), i,j<=p",
    extended=True,
)
def _d14(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    fu, fv, fiu = ft.unit_parts, ft.valuations, ft.inverse_unit_parts
    valn, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]

    sum_a = 0  # p S(i,j) / (i (j+1))
    sum_b = 0  # p S(i,j) / ((i+1)(j+1))
    for i in range(1, p + 1):
        vi = 1 + fv[2 * i] - fv[i]
        ui = fu[2 * i] * fiu[i] % m
        via, uia = vi - valn[i], ui * inv[i] % m
        vib, uib = vi - valn[i + 1], ui * inv[i + 1] % m
        for j in range(1, p + 1):
            vj = fv[2 * j] - fv[j] - fv[i + j] - valn[j + 1]
            uj = fu[2 * j] * fiu[j] % m * fiu[i + j] % m * inv[j + 1] % m
            va = via + vj
            if va < e:
                sum_a += _reduce_vu(va, uia * uj % m, e, m, ppow)
            vb = vib + vj
            if vb < e:
                sum_b += _reduce_vu(vb, uib * uj % m, e, m, ppow)
    lhs = (2 * sum_b - sum_a) % m
    rhs = 2 * p * (3 * ws.chi - 1) % m
    return [(None, lhs, rhs)]


@_register(
    "D17", 2, "single",
    "p sum_{i<p} S(i,p)/(i(p+1)) == 0  (mod p^2)",
    extended=True,
)
def _d17(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    valn, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for i in range(1, p):
        v, u = _szily_vu(ft, m, i, p)
        v += 1
        u = u * inv[i] % m * inv[p + 1] % m
        lhs += _reduce_vu(v, u, e, m, ppow)
    return [(None, lhs % m, 0)]


@_register(
    "D18", 2, "single",
    "sum_{i<p} S(i,p-1)/i == 2p + 1 - (p/3)(2p + 3^(p-1))  (mod p^2)",
    extended=True,
)
def _d18(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    _, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for i in range(1, p):
        v, u = _szily_vu(ft, m, i, p - 1)
        lhs += _reduce_vu(v, u * inv[i] % m, e, m, ppow)
    rhs = (2 * p + 1 - ws.chi * (2 * p + pow(3, p - 1, m))) % m
    return [(None, lhs % m, rhs)]


@_register(
    "D19", 2, "single",
    "sum_{j<=p} S(p,j)/(j+1) == 3^p (p/3) - 2p - 1  (mod p^2)",
    extended=True,
)
def _d19(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    valn, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for j in range(1, p + 1):
        v, u = _szily_vu(ft, m, p, j)
        v -= valn[j + 1]
        lhs += _reduce_vu(v, u * inv[j + 1] % m, e, m, ppow)
    rhs = (ws.chi * pow(3, p, m) - 2 * p - 1) % m
    return [(None, lhs % m, rhs)]


@_register(
    "D23", 2, "single",
    "sum_{k<p} M_k^2 == 2p [triple sum] + 2(p/3)(3^(p-1) - 4p) + 2p  (mod p^2)",
    extended=True,
)
def _d23(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    M = ws.sequence_tables(e).motzkin
    lhs = sum(x * x for x in M) % m
    ts = reduced_triple_sum(ws, "C1")
    rhs = (2 * p * ts + 2 * ws.chi * (pow(3, p - 1, m) - 4 * p) + 2 * p) % m
    return [(None, lhs, rhs)]


@_register(
    "E5", 2, "single",
    "sum_{j<p} S(p,j) == 2 (p/3) 3^(p-1)  (mod p^2)",
    extended=True,
)
def _e5(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for j in range(p):
        v, u = _szily_vu(ft, m, p, j)
        lhs += _reduce_vu(v, u, e, m, ppow)
    rhs = 2 * ws.chi * pow(3, p - 1, m) % m
    return [(None, lhs % m, rhs)]


@_register(
    "E6", 2, "single",
    "p sum_{j<p} S(p,j)/(p+1) == 2p (p/3)  (mod p^2)",
    extended=True,
)
def _e6(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    _, inv = ws.int_units(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for j in range(p):
        v, u = _szily_vu(ft, m, p, j)
        lhs += _reduce_vu(v + 1, u * inv[p + 1] % m, e, m, ppow)
    rhs = 2 * p * ws.chi % m
    return [(None, lhs % m, rhs)]


@_register(
    "E7", 2, "single",
    "sum_{j<p} S(p-1,j) == -p/3 + (2/3)(p/3) 3^(p-1)  (mod p^2)",
    extended=True,
)
def _e7(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    ft = ws.factorials(e)
    ppow = (1,) + ws.ctx.moduli[:3]
    lhs = 0
    for j in range(p):
        v, u = _szily_vu(ft, m, p - 1, j)
        lhs += _reduce_vu(v, u, e, m, ppow)
    inv3 = ws.frac(e, 1, 3)
    rhs = (-p * inv3 + 2 * inv3 * ws.chi * pow(3, p - 1, m)) % m
    return [(None, lhs % m, rhs)]


@_register(
    "E11", 2, "single",
    "sum_{k<p} T_k M_k == 2p [triple sums] - 7p/6 - (3p/2)(p/3) + (4/3)(p/3) 3^(p-1)  (mod p^2)",
    extended=True,
)
def _e11(ws: PrimeWorkspace, e: int):
    p = ws.ctx.p
    m = ws.ctx.modulus(e)
    st = ws.sequence_tables(e)
    lhs = sum(t * x for t, x in zip(st.trinomial, st.motzkin)) % m
    ts7 = reduced_triple_sum(ws, "C7")
    ts10 = reduced_triple_sum(ws, "C10")
    rhs = (
        2 * p * ts7
        - 2 * p * ts10
        - 7 * p * ws.frac(e, 1, 6)
        - 3 * p * ws.frac(e, 1, 2) * ws.chi
        + 4 * ws.frac(e, 1, 3) * ws.chi * pow(3, p - 1, m)
    ) % m
    return [(None, lhs, rhs)]


@_register("CPM1", 1, "single", "Cat_(p-1) == -1  (mod p)", extended=True)
def _cpm1(ws: PrimeWorkspace, e: int):
    m = ws.ctx.modulus(e)
    lhs = ws.factorials(e).catalan(ws.ctx.p - 1).reduce().value
    return [(None, lhs, -1 % m)]
