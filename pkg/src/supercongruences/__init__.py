"""Verification engine for congruences of Motzkin numbers, central trinomial
coefficients, and Catalan numbers modulo prime powers.

The library computes the sequences exactly and in residue systems mod p^e
(e <= 4), evaluates a catalogue of congruence checks over prime sweeps, and
re-verifies the underlying combinatorial identities in exact rational
arithmetic.
"""

__version__ = "0.1.0"

from .factorials import (
    FactorialTable,
    NegativeValuationError,
    ValuedResidue,
    build_factorial_table,
    catalan,
    central_binomial,
    valued_binomial,
)
from .identities import IdentityBounds, pochhammer, verify_all, verify_identity
from .registry import (
    REGISTRY,
    CheckDefinition,
    CheckResult,
    PrimeWorkspace,
    UnknownCheckError,
    alpha,
    beta,
    eval_check,
    naive_triple_sum,
    omega,
    psi,
    reduced_triple_sum,
    szily_s,
)
from .residues import (
    NotInvertibleError,
    PrimeContext,
    Residue,
    fermat_quotient,
    iverson,
    legendre_arg_over_3,
    legendre_p_over_3,
    mod_inverse,
    mod_mul,
    mod_pow,
    sieve_primes,
)
from .sequences import (
    HarmonicTable,
    SequenceTables,
    build_harmonic_table,
    build_sequence_tables,
    motzkin_exact,
    sequence_crosscheck,
    trinomial_exact,
)
from .harness import (
    Report,
    VerificationPlan,
    exit_code,
    render_report,
    resolve_checks,
    run_verification,
)

__all__ = [
    "CheckDefinition",
    "CheckResult",
    "FactorialTable",
    "HarmonicTable",
    "IdentityBounds",
    "NegativeValuationError",
    "NotInvertibleError",
    "PrimeContext",
    "PrimeWorkspace",
    "REGISTRY",
    "Report",
    "Residue",
    "SequenceTables",
    "UnknownCheckError",
    "ValuedResidue",
    "VerificationPlan",
    "alpha",
    "beta",
    "build_factorial_table",
    "build_harmonic_table",
    "build_sequence_tables",
    "catalan",
    "central_binomial",
    "eval_check",
    "exit_code",
    "fermat_quotient",
    "iverson",
    "legendre_arg_over_3",
    "legendre_p_over_3",
    "mod_inverse",
    "mod_mul",
    "mod_pow",
    "motzkin_exact",
    "naive_triple_sum",
    "omega",
    "pochhammer",
    "psi",
    "reduced_triple_sum",
    "render_report",
    "resolve_checks",
    "run_verification",
    "sequence_crosscheck",
    "sieve_primes",
    "szily_s",
    "trinomial_exact",
    "valued_binomial",
    "verify_all",
    "verify_identity",
]
