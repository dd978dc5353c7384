"""Batch driver: prime-range sweeps, parallel execution, report rendering.

The work unit is one prime (all its selected checks); units are independent,
so any worker count produces the same result set, and the merge step sorts by
(prime, check id) to keep reports deterministic under parallel scheduling.
"""

from __future__ import annotations

import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .registry import (
    REGISTRY,
    CheckResult,
    PrimeWorkspace,
    UnknownCheckError,
    core_check_ids,
    eval_check,
    extended_check_ids,
)
from .residues import PrimeContext, sieve_primes

REPORT_FORMATS = ("table", "json", "csv")


def resolve_checks(selector, include_extended: bool = False) -> tuple[str, ...]:
    """Expand a check selector into registry ids.

    Accepts the strings "all-core" / "all-extended", a comma-separated id
    list, or an iterable of ids.  "all-extended" means core plus extended;
    include_extended upgrades "all-core" the same way.
    """
    if isinstance(selector, str):
        parts = [s.strip() for s in selector.split(",") if s.strip()]
    else:
        parts = list(selector)
    ids: list[str] = []
    for part in parts:
        if part == "all-core":
            ids += core_check_ids()
            if include_extended:
                ids += extended_check_ids()
        elif part == "all-extended":
            ids += core_check_ids() + extended_check_ids()
        elif part in REGISTRY:
            ids.append(part)
        else:
            raise UnknownCheckError(f"unknown check id {part!r}")
    return tuple(dict.fromkeys(ids))


@dataclass
class VerificationPlan:
    """What to verify: which checks, over which primes, how."""

    checks: tuple[str, ...]
    lo: int
    hi: int
    jobs: int = 1
    exponent_overrides: dict[str, int] = field(default_factory=dict)
    dnew1_full_grid: bool = False

    def __post_init__(self) -> None:
        self.checks = resolve_checks(self.checks)
        if not 0 <= self.lo <= self.hi:
            raise ValueError(f"need 0 <= lo <= hi, got [{self.lo}, {self.hi}]")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        for check_id, e in self.exponent_overrides.items():
            if check_id not in REGISTRY:
                raise UnknownCheckError(f"override for unknown check {check_id!r}")
            if not 1 <= e <= 4:
                raise ValueError(f"override exponent {e} for {check_id} not in 1..4")

    def primes(self) -> list[int]:
        # Primes below 5 are outside the p >= 5 hypothesis and are skipped.
        lo = max(self.lo, 5)
        if lo > self.hi:
            return []
        return sieve_primes(lo, self.hi)


@dataclass
class Report:
    """Merged results of a sweep, ordered by (prime, check id)."""

    results: list[CheckResult]
    elapsed: float
    version: str = __version__

    @property
    def pass_count(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def fail_count(self) -> int:
        return sum(1 for r in self.results if not r.passed)

    @property
    def all_passed(self) -> bool:
        return self.fail_count == 0


def _verify_prime(args) -> list[CheckResult]:
    p, check_ids, overrides, options = args
    ws = PrimeWorkspace(PrimeContext(p), options)
    return [eval_check(cid, ws, overrides.get(cid)) for cid in check_ids]


def run_verification(plan: VerificationPlan, progress: bool = False) -> Report:
    """Execute the plan; tables are built once per prime and reused."""
    start = time.perf_counter()
    primes = plan.primes()
    options = {"dnew1_full_grid": plan.dnew1_full_grid}
    work = [(p, plan.checks, plan.exponent_overrides, options) for p in primes]

    results: list[CheckResult] = []
    if plan.jobs == 1 or len(primes) <= 1:
        for args in work:
            batch = _verify_prime(args)
            results.extend(batch)
            if progress:
                bad = sum(1 for r in batch if not r.passed)
                status = "ok" if bad == 0 else f"{bad} FAILED"
                print(f"p={args[0]}: {len(batch)} checks {status}", file=sys.stderr)
    else:
        workers = min(plan.jobs, len(primes))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for args, batch in zip(work, pool.map(_verify_prime, work)):
                results.extend(batch)
                if progress:
                    bad = sum(1 for r in batch if not r.passed)
                    status = "ok" if bad == 0 else f"{bad} FAILED"
                    print(f"p={args[0]}: {len(batch)} checks {status}", file=sys.stderr)

    results.sort(key=lambda r: (r.p, r.id))
    return Report(results, time.perf_counter() - start)


def exit_code(report: Report) -> int:
    """0 when every check passed, 1 otherwise (2 is reserved for usage errors)."""
    return 0 if report.all_passed else 1


def _result_row(r: CheckResult) -> dict:
    row = {
        "check": r.id,
        "prime": r.p,
        "exp": r.exponent,
        "lhs": str(r.lhs.value),
        "rhs": str(r.rhs.value),
        "pass": r.passed,
    }
    if r.sub_failures:
        row["sub_failures"] = [
            {"param": param, "lhs": str(lhs), "rhs": str(rhs)}
            for param, lhs, rhs in r.sub_failures
        ]
    return row


def render_report(
    report: Report,
    fmt: str = "table",
    include_timing: bool = False,
    include_registry: bool = False,
) -> str:
    """Deterministic serialization; timing is opt-in so that reports from
    different worker counts stay byte-identical."""
    if fmt == "json":
        payload: dict = {
            "results": [_result_row(r) for r in report.results],
            "summary": {"pass": report.pass_count, "fail": report.fail_count},
        }
        if include_registry:
            payload["registry"] = {
                r.id: {
                    "description": REGISTRY[r.id].description,
                    "exp": REGISTRY[r.id].exponent,
                    "family": REGISTRY[r.id].family,
                }
                for r in report.results
            }
        if include_timing:
            payload["elapsed_ms"] = int(report.elapsed * 1000)
        return json.dumps(payload, separators=(",", ":"))

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "prime", "exp", "lhs", "rhs", "pass"])
        for r in report.results:
            writer.writerow(
                [r.id, r.p, r.exponent, r.lhs.value, r.rhs.value, str(r.passed).lower()]
            )
        return buf.getvalue()

    if fmt == "table":
        lines = [f"{'check':<8} {'prime':>6} {'exp':>3} {'lhs':>22} {'rhs':>22} pass"]
        for r in report.results:
            lines.append(
                f"{r.id:<8} {r.p:>6} {r.exponent:>3} {r.lhs.value:>22} "
                f"{r.rhs.value:>22} {'yes' if r.passed else 'NO'}"
            )
            for param, lhs, rhs in r.sub_failures:
                lines.append(f"    failed at {param}: lhs={lhs} rhs={rhs}")
        lines.append(f"summary: {report.pass_count} pass, {report.fail_count} fail")
        if include_timing:
            lines.append(f"elapsed: {report.elapsed:.3f}s")
        return "\n".join(lines) + "\n"

    raise ValueError(f"unknown format {fmt!r}; expected one of {REPORT_FORMATS}")
