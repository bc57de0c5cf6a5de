"""Resolvent bounds and the matrices that attain them."""
import math

import numpy as np

from resolvent_bounds import (
    Spectrum,
    bound_theorem1,
    bound_theorem3,
    certify_sharpness_theorem1,
    ds_constant_sup,
    extremal_T_star,
    linalg,
    sup_resolvent_R,
)

# %% a contraction with a triple eigenvalue and its resolvent at a few points
lam, n = 0.4, 3
T = extremal_T_star(lam, n)
sigma = Spectrum.single(lam, n)
print("zeta    ||R(zeta,T)||     bound (X norm)     bound (closed form)")
for zeta in (0.0, -0.5, 0.9, 0.3j):
    actual = linalg.spectral_norm(linalg.resolvent(T, zeta))
    b1 = bound_theorem1(sigma, zeta).bound_value
    b3 = bound_theorem3(sigma, zeta).bound_value
    print(f"{zeta!s:6s}  {actual:14.8f}  {b1:16.8f}  {b3:18.8f}")

# on the real axis the first bound is attained
print("\nrelative gaps on real zeta:",
      [f"{certify_sharpness_theorem1(lam, n, z):.1e}" for z in (-1, -0.3, 0.0, 0.8, 1)])

# %% the Kronecker-type supremum and its large-n behaviour
for zeta in (0.0, 0.5):
    print(f"\nzeta = {zeta}, r = 0.5")
    for n in (2, 8, 20, 60):
        w = sup_resolvent_R(zeta, 0.5, n, certify=n <= 8)
        ratio = w.value * 0.5**n * (1 - 0.5 * zeta)
        gap = "" if w.rel_gap is None else f"  witness gap {w.rel_gap:.1e}"
        print(f"  n={n:2d}  R = {w.value:.6e}  R r^n (1 - r|zeta|) = {ratio:.10f}{gap}")

# %% on the unit circle the constant approaches cot(pi / 4n1)
for n1 in (2, 4, 8):
    vals = [ds_constant_sup(n1, 2, rho, certify=False).value for rho in (0.0, 0.5, 0.9, 0.999)]
    print(f"n1={n1}: {np.round(vals, 6)}  cot = {1 / math.tan(math.pi / (4 * n1)):.6f}")
