"""How the roots of the characteristic equation split across branches.

For each parameter case of the trigonometric root count this prints the
predicted count, what the bracketing scan found, and how many roots came
from the two hyperbolic branches.
"""
import numpy as np

from resolvent_bounds import ExtremalParams, count_trig_roots, root_census, scan_trig_roots
from resolvent_bounds.chareq import lemma_case_grid, threshold_pair
from resolvent_bounds.toeplitz import flipped_X

print("case     n     r     beta   predicted  found  +cosh  -cosh   thresholds")
for case, p in lemma_case_grid():
    c = root_census(p)
    t_pi, t_0 = threshold_pair(p)
    print(f"{case:6s} {p.n:3d}  {p.r:.2f}  {p.beta:.2f}  {count_trig_roots(p):6d}"
          f"  {2 * len(scan_trig_roots(p)):6d}  {len(c.found_cosh_plus):5d}  {len(c.found_cosh_minus):5d}"
          f"   ({t_pi:.3g}, {t_0:.3g})")

# every eigenvalue of the flipped matrix shows up exactly once
p = ExtremalParams(9, 0.45, 1.7)
c = root_census(p)
print("\nrecovered lambda^2:", np.sort(c.lambda_squares))
print("eigensolver      :", np.sort(np.linalg.eigvalsh(flipped_X(p)) ** 2))
