"""Command-line front end: verify / list / identities / sequence.

Exit codes: 0 all requested checks passed, 1 some check or identity failed,
2 usage or configuration error.  Progress goes to stderr, results to stdout.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import __version__
from .factorials import FactorialTable
from .harness import (
    REPORT_FORMATS,
    VerificationPlan,
    exit_code,
    render_report,
    resolve_checks,
    run_verification,
)
from .identities import IDENTITIES, IdentityBounds, verify_identity
from .registry import REGISTRY, UnknownCheckError
from .residues import PrimeContext
from .sequences import build_harmonic_table, motzkin_exact, trinomial_exact

SEQUENCE_NAMES = ("motzkin", "trinomial", "catalan", "central-binomial", "harmonic")


def _parse_prime_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        return int(lo_text), int(hi_text)
    single = int(text)
    return single, single


def _parse_overrides(pairs: list[str]) -> dict[str, int]:
    out = {}
    for pair in pairs:
        check_id, _, exp = pair.partition("=")
        if not exp:
            raise ValueError(f"override must look like CHECK=e, got {pair!r}")
        out[check_id] = int(exp)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercong",
        description="Verify congruences of Motzkin / central trinomial / Catalan "
        "sums over prime ranges.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run congruence checks over a prime range")
    verify.add_argument(
        "--checks",
        required=True,
        help="comma-separated check ids, or all-core / all-extended",
    )
    verify.add_argument(
        "--primes", required=True, help="inclusive prime range lo..hi (or a single p)"
    )
    verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    verify.add_argument("--format", choices=REPORT_FORMATS, default="table")
    verify.add_argument(
        "--extended",
        action="store_true",
        help="with --checks all-core, also run the extended proof-step checks",
    )
    verify.add_argument(
        "--timing", action="store_true", help="include elapsed time in the report"
    )
    verify.add_argument(
        "--citations",
        action="store_true",
        help="embed registry descriptions in the JSON report",
    )
    verify.add_argument(
        "--override",
        action="append",
        default=[],
        metavar="CHECK=e",
        help="evaluate CHECK at modulus exponent e instead of its registered one",
    )
    verify.add_argument(
        "--dnew1-full",
        action="store_true",
        help="run the DNEW1 grid over all 0 <= i <= j < p instead of the capped grid",
    )
    verify.add_argument("--quiet", action="store_true", help="suppress progress lines")

    sub.add_parser("list", help="print the check registry")

    identities = sub.add_parser("identities", help="verify exact identities")
    identities.add_argument("--ids", default="all", help="comma-separated ids or all")
    identities.add_argument("--n-max", type=int, default=100)
    identities.add_argument("--ij-max", type=int, default=25)
    identities.add_argument("--rational-ij-max", type=int, default=10)

    sequence = sub.add_parser("sequence", help="dump a sequence")
    sequence.add_argument("--name", required=True, choices=SEQUENCE_NAMES)
    sequence.add_argument("--count", type=int, required=True, help="entries to print")
    sequence.add_argument("--prime", type=int, help="reduce mod prime^exp")
    sequence.add_argument("--exp", type=int, default=1, help="modulus exponent 1..4")

    return parser


def _cmd_verify(args) -> int:
    checks = resolve_checks(args.checks, include_extended=args.extended)
    lo, hi = _parse_prime_range(args.primes)
    plan = VerificationPlan(
        checks=checks,
        lo=lo,
        hi=hi,
        jobs=args.jobs,
        exponent_overrides=_parse_overrides(args.override),
        dnew1_full_grid=args.dnew1_full,
    )
    report = run_verification(plan, progress=not args.quiet)
    sys.stdout.write(
        render_report(
            report,
            fmt=args.format,
            include_timing=args.timing,
            include_registry=args.citations,
        )
    )
    if args.format == "json":
        sys.stdout.write("\n")
    return exit_code(report)


def _cmd_list(_args) -> int:
    print(f"{'id':<8} {'exp':>3} {'family':<13} {'set':<8} description")
    for defn in REGISTRY.values():
        tier = "extended" if defn.extended else "core"
        print(f"{defn.id:<8} {defn.exponent:>3} {defn.family:<13} {tier:<8} {defn.description}")
    return 0


def _cmd_identities(args) -> int:
    if args.ids == "all":
        ids = list(IDENTITIES)
    else:
        ids = [s.strip() for s in args.ids.split(",") if s.strip()]
        for identity_id in ids:
            if identity_id not in IDENTITIES:
                raise UnknownCheckError(f"unknown identity id {identity_id!r}")
    bounds = IdentityBounds(
        n_max=args.n_max, ij_max=args.ij_max, rational_ij_max=args.rational_ij_max
    )
    failed = 0
    for identity_id in ids:
        report = verify_identity(identity_id, bounds)
        if report.passed:
            print(f"{identity_id:<10} ok   ({report.points_checked} points)")
        else:
            failed += 1
            print(f"{identity_id:<10} FAIL ({len(report.counterexamples)} counterexamples)")
            for params, lhs, rhs in report.counterexamples[:5]:
                print(f"    at {params}: lhs={lhs} rhs={rhs}")
    return 1 if failed else 0


def _cmd_sequence(args) -> int:
    n = args.count
    if n < 0:
        raise ValueError("count must be nonnegative")
    if n == 0:
        return 0
    if args.prime is None:
        if args.name == "motzkin":
            values = motzkin_exact(n - 1)
        elif args.name == "trinomial":
            values = trinomial_exact(n - 1)
        elif args.name == "catalan":
            import math

            values = [math.comb(2 * k, k) // (k + 1) for k in range(n)]
        elif args.name == "central-binomial":
            import math

            values = [math.comb(2 * k, k) for k in range(n)]
        else:  # harmonic, exact rationals
            acc = Fraction(0)
            values = [acc]
            for k in range(1, n):
                acc += Fraction(1, k)
                values.append(acc)
        for v in values:
            print(v)
        return 0

    ctx = PrimeContext(args.prime)
    e = args.exp
    m = ctx.modulus(e)
    if args.name == "harmonic":
        if e != 1:
            raise ValueError("harmonic tables are defined mod p only (use --exp 1)")
        if n > ctx.p:
            raise ValueError(f"harmonic table holds H_0..H_(p-1); count <= {ctx.p}")
        values = list(build_harmonic_table(ctx).values[:n])
    elif args.name == "motzkin":
        values = [x % m for x in motzkin_exact(n - 1)]
    elif args.name == "trinomial":
        values = [x % m for x in trinomial_exact(n - 1)]
    else:
        table = FactorialTable(ctx, e, 2 * n)
        if args.name == "catalan":
            values = [table.catalan(k).reduce().value for k in range(n)]
        else:
            values = [table.binomial_residue(2 * k, k) for k in range(n)]
    for v in values:
        print(v)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "list":
            return _cmd_list(args)
        if args.command == "identities":
            return _cmd_identities(args)
        if args.command == "sequence":
            return _cmd_sequence(args)
    except (UnknownCheckError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
