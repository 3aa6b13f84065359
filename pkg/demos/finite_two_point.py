"""Two-point and three-class finite hypergroups: exponentials and the
(empty) space of sine functions."""

import numpy as np

from hypersine import (TabulatedFunction, exp_residual, exponentials,
                       power_identity_check, s3_conjugacy_hypergroup,
                       sine_space, two_point_hypergroup)

for theta in (0.1, 0.5, 0.9):
    hg = two_point_hypergroup(theta)
    print(f"two-point family, theta = {theta}")
    for m in exponentials(hg):
        vals = np.round(np.real(np.array(m)), 12)
        dim = len(sine_space(hg, list(m)))
        print(f"  exponential {vals} -> sine-space dimension {dim}")
    m1 = TabulatedFunction([1.0, -theta])
    rep = exp_residual(hg, m1, hg.all_pairs())
    print(f"  exp residual of (1, -theta): {rep.max_abs:.2e}")
    zero = TabulatedFunction([0.0, 0.0])
    rep = power_identity_check(hg, zero, m1, 0, 1, 8)
    print(f"  power identity residual for the zero sine: {rep.max_abs:.2e}")

print()
print("conjugacy-class hypergroup of the symmetric group on 3 letters")
s3 = s3_conjugacy_hypergroup()
for m in exponentials(s3):
    vals = np.round(np.real(np.array(m)), 12)
    dim = len(sine_space(s3, list(m)))
    print(f"  exponential {vals} -> sine-space dimension {dim}")
print("every sine function on these compact examples is identically zero")
