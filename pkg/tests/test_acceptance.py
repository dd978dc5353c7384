"""Acceptance suite: every criterion at its stated range and tolerance.

All congruence comparisons are exact residue equalities (zero tolerance);
the two runtime criteria assert their stated wall-clock budgets.  Each test
prints one PASS/FAIL line.
"""

import math
import time

from supercongruences.factorials import build_factorial_table
from supercongruences.harness import VerificationPlan, render_report, run_verification
from supercongruences.identities import IdentityBounds, verify_all
from supercongruences.registry import PrimeWorkspace, naive_triple_sum, reduced_triple_sum
from supercongruences.residues import PrimeContext, sieve_primes
from supercongruences.sequences import build_sequence_tables


def _run(checks, lo, hi, **kw):
    plan = VerificationPlan(checks=checks, lo=lo, hi=hi, **kw)
    return run_verification(plan)


def _conclude(num, description, ok):
    print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} - {description}")
    assert ok, f"criterion {num} failed: {description}"


def test_criterion_01_main_theorem():
    start = time.perf_counter()
    report = _run(("A2", "A3", "A4"), 5, 499)
    elapsed = time.perf_counter() - start
    spot = {r.id: (r.lhs.value, r.rhs.value) for r in report.results if r.p == 5}
    ok = (
        report.all_passed
        and len(report.results) == 3 * 93
        and spot["A2"] == (3, 3)
        and spot["A3"] == (6, 6)
        and spot["A4"] == (7, 7)
        and elapsed < 120.0
    )
    _conclude(1, f"A2/A3/A4 mod p^2 for 5 <= p <= 499 in {elapsed:.1f}s", ok)


def test_criterion_02_known_supercongruence():
    report = _run(("A1",), 5, 499)
    spot = [r for r in report.results if r.p == 5][0]
    ok = report.all_passed and spot.lhs.value == spot.rhs.value == 865 % 25 == 15
    _conclude(2, "A1 mod p^2 for 5 <= p <= 499 (p=5 spot: 15)", ok)


def test_criterion_03_wolstenholme():
    report = _run(("B1", "B2"), 5, 1999)
    spot = [r for r in report.results if r.p == 7 and r.id == "B1"][0]
    ok = report.all_passed and spot.lhs.value == 1716 % 343 == 1
    _conclude(3, "B1/B2 mod p^3 for 5 <= p <= 1999", ok)


def test_criterion_04_lemma_suites():
    checks = (
        "B3", "B4", "BNEW4", "B5", "B18", "B7", "BNEW9",
        "BL1", "BL2", "BL3", "B8", "BNEW3", "B9", "GRANV", "B13",
    )
    report = _run(checks, 5, 499)
    ok = report.all_passed and len(report.results) == len(checks) * 93
    _conclude(4, "lemma suites (incl. B7 mod p^4, GRANV x=2..10) for 5 <= p <= 499", ok)


def test_criterion_05_per_k_families():
    report = _run(("B14", "B15", "B16"), 5, 199)
    ok = report.all_passed and not any(r.sub_failures for r in report.results)
    _conclude(5, "B14 (k<=p), B15 (k<=p-1), B16 (k<=p) for 5 <= p <= 199", ok)


def test_criterion_06_triple_sums():
    report = _run(("C1", "C7", "C10"), 5, 199)
    agree = True
    for p in sieve_primes(5, 61):
        ctx = PrimeContext(p)
        ws = PrimeWorkspace(ctx)
        for check_id in ("C1", "C7", "C10"):
            if reduced_triple_sum(ws, check_id) != naive_triple_sum(ctx, check_id):
                agree = False
    ok = report.all_passed and agree
    _conclude(6, "C1/C7/C10 via O(p^2) reduction for p <= 199; naive O(p^3) agreement for p <= 61", ok)


def test_criterion_07_extended_proof_steps():
    checks = (
        "DNEW1", "D12", "D13", "D14", "D17", "D18", "D19", "D23",
        "E5", "E6", "E7", "E11", "CPM1",
    )
    report = _run(checks, 5, 199)
    ok = report.all_passed and len(report.results) == len(checks) * 44
    _conclude(7, "extended proof-step set (DNEW1 grid, D12-D23, E5-E11, CPM1) for 5 <= p <= 199", ok)


def test_criterion_08_identity_suite():
    start = time.perf_counter()
    reports = verify_all(IdentityBounds(n_max=100, ij_max=25, rational_ij_max=10))
    elapsed = time.perf_counter() - start
    ok = all(r.passed for r in reports) and len(reports) == 15 and elapsed < 60.0
    _conclude(8, f"all 15 identities exact at stated bounds in {elapsed:.1f}s", ok)


def test_criterion_09_oracle_equivalence():
    ok = True
    for p in sieve_primes(5, 97):
        ctx = PrimeContext(p)
        for e in (1, 2):
            exact = build_sequence_tables(ctx, e, mode="exact")
            modular = build_sequence_tables(ctx, e, mode="modular")
            if exact != modular:
                ok = False
    for p in sieve_primes(5, 199):
        ctx = PrimeContext(p)
        exponents = (1, 2, 3, 4) if p <= 61 else (2,)
        for e in exponents:
            table = build_factorial_table(ctx, e, 2 * p)
            m = p**e
            for n in range(2 * p + 1):
                row = 1  # C(n, 0)
                for k in range(n + 1):
                    if table.binomial_residue(n, k) != row % m:
                        ok = False
                    row = row * (n - k) // (k + 1)
    _conclude(9, "modular tables == exact tables (p <= 97); valued binomials == exact (n <= 2p, p <= 199)", ok)


def test_criterion_10_determinism():
    checks = ("A2", "B1", "BL1", "B14", "GRANV", "C1", "CPM1")
    serial = _run(checks, 5, 61, jobs=1)
    parallel = _run(checks, 5, 61, jobs=4)
    ok = render_report(serial, "json") == render_report(parallel, "json")
    _conclude(10, "JSON report byte-identical for 1-worker and 4-worker runs", ok)
