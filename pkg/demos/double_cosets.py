"""Double cosets of the affine group by the order-two subgroup.

The subgroup is not normal, the quotient is a hypergroup rather than a
group, and the sine functions pick up a logarithm. Candidates suggested by
the group-case theory fail here, which the falsification helpers quantify.
"""

import math

from hypersine import (CosetHypergroup, coset_exponential, coset_sine,
                       falsify_dalembert_alpha, falsify_square_term,
                       group_inv, group_mul)
from hypersine.core import exp_residual, sine_residual
from hypersine.coset import conjugate_by

p, q = (2.0, 3.0), (0.5, -1.0)
print(f"affine action: {p} . {q} = {group_mul(p, q)}")
print(f"inverse of {p}: {group_inv(p)}")
print(f"conjugating the reflection by (3, 5): "
      f"{conjugate_by((3.0, 5.0), (-1.0, 0.0))}  (not in the subgroup)")

hg = CosetHypergroup()
mu = hg.convolve((2.0, 1.0), (3.0, 1.0))
print(f"\ncoset convolution (2,1)*(3,1): {mu}")

pairs = [((2.0, 1.0), (3.0, 0.5)), ((0.5, 2.0), (4.0, 0.0)),
         ((1.25, 0.75), (0.8, 3.0))]
for lam in (1.0, 0.5 + 0.5j):
    m = coset_exponential(lam)
    f = coset_sine(1.0, lam)
    e = exp_residual(hg, m, pairs).max_rel
    s = sine_residual(hg, f, m, pairs).max_rel
    print(f"lam = {lam}: exp residual {e:.2e}, sine residual {s:.2e}")

print("\nfalsifications (residuals should be far from zero):")
rep = falsify_dalembert_alpha(0.0, 1.0, [(2.0, 1.0, 1.0, 1.0)])
want = abs(math.cosh(3.0) + math.cosh(1.0) - 2.0 * math.cosh(1.0) ** 2)
print(f"  cosh(u) candidate: residual {rep.max_abs:.6f} "
      f"(independent evaluation {want:.6f})")
rep = falsify_square_term(1.0, 1.0, [((2.0, 1.0), (3.0, 1.0))])
print(f"  u^2-contaminated candidate: residual {rep.max_abs:.2f}")
