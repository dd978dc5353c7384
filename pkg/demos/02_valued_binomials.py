"""
Binomials mod p^e with the power of p tracked separately
========================================================

C(2k,k) is divisible by p for p/2 < k < p, so a plain residue mod p loses
it entirely.  Factorial tables that carry (valuation, p-free unit) pairs
keep such quantities exact, which is what makes statements like
Wolstenholme's congruence checkable mod p^3.
"""

import math

from supercongruences import PrimeContext, build_factorial_table, valued_binomial
from supercongruences.factorials import kummer_carries

ctx = PrimeContext(7)
table = build_factorial_table(ctx, exponent=3)

# C(14, 7) = 3432 = 2^3 * 3 * 11 * 13 has valuation 0 at p = 7;
# C(10, 5) = 252 = 2^2 * 3^2 * 7 has valuation 1.
for n, k in [(14, 7), (10, 5), (13, 6)]:
    vb = valued_binomial(table, n, k)
    print(f"C({n},{k}) = {math.comb(n, k)} = 7^{vb.valuation} * {vb.unit.value} (mod 7^3)")

# The valuation equals the number of carries when adding k and n-k in base p.
print("\ncarries when adding 5 + 5 in base 7:", kummer_carries(10, 5, 7))

# Wolstenholme: C(2p-1, p-1) == 1 mod p^3 for every prime p >= 5.
print("\nC(2p-1, p-1) mod p^3 for small primes:")
for p in (5, 7, 11, 13, 101):
    t = build_factorial_table(PrimeContext(p), 3, 2 * p)
    print(f"  p={p:>4}: {valued_binomial(t, 2 * p - 1, p - 1).reduce().value}")

# Catalan numbers ride along: Cat_(p-1) == -1 mod p.
print("\nCat_(p-1) mod p (should be p-1):")
for p in (5, 7, 11, 13):
    t = build_factorial_table(PrimeContext(p), 1, 2 * p)
    print(f"  p={p}: {t.catalan(p - 1).reduce().value}")
