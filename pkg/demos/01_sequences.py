"""
Generating the sequences, exactly and in residue systems
========================================================

Motzkin numbers M_n, central trinomial coefficients T_n, Catalan numbers
Cat_n, and central binomials C(2n,n), first as exact integers and then
reduced mod p^e, with every alternative closed form cross-checked.
"""

from supercongruences import (
    PrimeContext,
    build_harmonic_table,
    build_sequence_tables,
    motzkin_exact,
    sequence_crosscheck,
    trinomial_exact,
)

print("First Motzkin numbers:   ", motzkin_exact(10))
print("First trinomial numbers: ", trinomial_exact(10))

# The same sequences as residues mod 13^2, straight from the exact values.
ctx = PrimeContext(13)
tables = build_sequence_tables(ctx, exponent=2)
print("\nM_k mod 169:", tables.motzkin)
print("T_k mod 169:", tables.trinomial)
print("Cat_k mod 169:", tables.catalan)

# The modular route recomputes M and T through alternating binomial sums
# without ever touching a big integer; both routes must agree.
modular = build_sequence_tables(ctx, exponent=2, mode="modular")
print("\nmodular route agrees with exact route:", modular == tables)

# Five inter-expressions (binomial, inverse binomial, alternating forms)
# are re-evaluated for every n < p and compared entry by entry.
report = sequence_crosscheck(ctx, exponent=2)
print(f"crosscheck at p=13, e=2: {report.checked} rows, failures: {report.failures}")

# Harmonic numbers H_n mod p; the full row H_(p-1) always vanishes.
harm = build_harmonic_table(ctx)
print("\nH_n mod 13:", harm.values)
print("H_(p-1) == 0:", harm.values[12] == 0)
