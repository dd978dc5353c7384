"""
The exact-arithmetic identity suite
===================================

Every combinatorial identity that the congruence checks lean on is
re-verified here over exact integers and rationals, no modulus anywhere.
This is the anti-hallucination oracle: if a residue-side computation ever
drifted, these grids would catch the identity it silently assumed.
"""

from fractions import Fraction

from supercongruences import IdentityBounds, pochhammer, verify_all
from supercongruences.identities import szily_sum, verify_identity

bounds = IdentityBounds(n_max=40, ij_max=12, rational_ij_max=6)
for report in verify_all(bounds):
    flag = "ok" if report.passed else "FAIL"
    print(f"{report.id:<10} {report.points_checked:>6} points  {flag}")

# A taste of what is being checked: the alternating central-binomial
# convolution collapses to a ratio of binomials (an integer!), ...
print("\nS(3,2) as a ratio:", Fraction(20 * 6, 10), "as an alternating sum:", szily_sum(3, 2))

# ... and the partial-fraction decomposition behind the mod-p^2 reduction
# of sum_k C(k,i) C(k,j), sampled at a non-pole rational point.
x = Fraction(1, 2)
print("rising factorial (1/2)_3 =", pochhammer(x, 3))

report = verify_identity("I-D4", IdentityBounds(rational_ij_max=4))
print(f"partial fractions checked at {report.points_checked} (i, j, x) points:",
      "ok" if report.passed else report.counterexamples[:3])
