"""Norms of the extremal Toeplitz matrices X_{r, beta}.

Three ways to get ||X_{r, beta}||: the dense eigensolver on the flipped
Hankel matrix, the Chebyshev characteristic equation, and closed forms
where they exist.  Run with ``python3 demos/01_extremal_norms.py``.
"""
import math

import numpy as np

from resolvent_bounds import ExtremalParams, build_X, solve_char_eq, xnorm_limit_gap, xnorm_oracle

# the matrix itself: lower-triangular Toeplitz, r^(n-1) on the diagonal
print(build_X(ExtremalParams(4, 0.5, 1.5)))

# %% r = 1: closed forms
print("\n  n   ||X_{1,2}||      cot(pi/4n)     ||X_{1,1}||   1/(2 sin(pi/(4n+2)))")
for n in (1, 2, 5, 10, 20):
    a = xnorm_oracle(ExtremalParams(n, 1.0, 2.0))
    b = xnorm_oracle(ExtremalParams(n, 1.0, 1.0))
    print(f"{n:3d}  {a:14.10f}  {1 / math.tan(math.pi / (4 * n)):14.10f}"
          f"  {b:12.8f}  {1 / (2 * math.sin(math.pi / (4 * n + 2))):12.8f}")

# %% characteristic equation vs eigensolver
rng = np.random.default_rng(0)
print("\n  n      r      beta    char_eq           oracle            method")
for _ in range(8):
    p = ExtremalParams(int(rng.integers(2, 12)), float(rng.uniform(0.1, 1)), float(rng.uniform(0.05, 2)))
    res = solve_char_eq(p)
    print(f"{p.n:3d}  {p.r:.3f}  {p.beta:.3f}  {res.norm:.14f}  {xnorm_oracle(p):.14f}  {res.method}")

# %% the norm stays put on beta = 1 - r^2
for r in (0.2, 0.6, 0.9):
    vals = [xnorm_oracle(ExtremalParams(n, r, 1 - r * r)) for n in (1, 5, 25)]
    print(f"r={r}: ||X_(r,1-r^2)|| for n=1,5,25 -> {vals}")

# %% convergence to beta / (1 - r^2)
# the plain difference hits rounding near n = 30; the gap function does not
print("\n  n   ||X_{0.5,1.5}||        2 - ||X||")
for n in (5, 10, 20, 30, 45, 60):
    p = ExtremalParams(n, 0.5, 1.5)
    print(f"{n:3d}  {xnorm_oracle(p):.16f}  {xnorm_limit_gap(p):.6e}")
