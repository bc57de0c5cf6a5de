"""Model operators in the Malmquist-Walsh basis.

For a finite Blaschke product ``B`` with zeros ``nu_1, ..., nu_N`` the
compressed shift ``M_B`` has a lower-triangular matrix in the
Malmquist-Walsh basis whose resolvent is known in closed form.  This module
builds that resolvent, recovers ``M_B`` from it, and provides the extremal
analytic Toeplitz contraction ``T*`` together with the block models used
for the unimodular part of a spectrum.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .disk import BlaschkeProduct
from .errors import OutOfDomain, SpectrumCollision

PROBE_POINT = 2.0


@dataclass(frozen=True)
class ModelResolvent:
    matrix: np.ndarray
    zeta: complex
    blaschke: BlaschkeProduct


def model_resolvent(B: BlaschkeProduct, zeta: complex) -> ModelResolvent:
    """Resolvent ``(zeta - M_B)^{-1}`` in the Malmquist-Walsh basis.

    Entry ``(i, j)`` is zero above the diagonal, ``1/(zeta - nu_i)`` on it,
    and below it

        sqrt(1-|nu_i|^2) sqrt(1-|nu_j|^2) / ((1 - conj(nu_i) zeta)(1 - conj(nu_j) zeta))
            * prod_{k=j}^{i} 1 / b_{nu_k}(zeta).
    """
    zeta = complex(zeta)
    nu = np.array(B.zeros)
    if np.min(np.abs(nu - zeta)) < 1e-12:
        raise SpectrumCollision(f"zeta={zeta} is a zero of B")
    N = nu.size
    den = 1 - nu.conj() * zeta
    inv_b = den / (zeta - nu)
    weight = np.sqrt(1 - np.abs(nu) ** 2) / den
    R = np.zeros((N, N), dtype=complex)
    for j in range(N):
        R[j, j] = 1 / (zeta - nu[j])
        run = inv_b[j]
        for i in range(j + 1, N):
            run = run * inv_b[i]
            R[i, j] = weight[i] * weight[j] * run
    return ModelResolvent(R, zeta, B)


def model_matrix(B: BlaschkeProduct, probe: complex = PROBE_POINT) -> np.ndarray:
    """Matrix of ``M_B`` recovered as ``probe I - (probe - M_B)^{-1}^{-1}``.

    The probe point must avoid the zeros; the default ``2`` lies outside the
    closed disk.
    """
    R = model_resolvent(B, probe).matrix
    from scipy.linalg import solve_triangular

    N = R.shape[0]
    Rinv = solve_triangular(R, np.eye(N, dtype=complex), lower=True)
    M = probe * np.eye(N) - Rinv
    M[np.triu_indices(N, 1)] = 0.0
    return M


def extremal_T_star(lam: float, n: int) -> np.ndarray:
    """Lower-triangular Toeplitz contraction with minimal polynomial ``(z - lam)^n``.

    Diagonal ``lam``, first subdiagonal ``1 - lam^2`` and ``k``-th subdiagonal
    ``(-lam)^(k-1) (1 - lam^2)``.
    """
    lam = float(lam)
    if not (-1 < lam < 1):
        raise OutOfDomain(f"lambda must lie in (-1, 1), got {lam}")
    if n < 1:
        raise OutOfDomain("n must be positive")
    col = np.empty(n)
    col[0] = lam
    col[1:] = (1 - lam**2) * (-lam) ** np.arange(n - 1)
    return _lower_toeplitz(col)


def _lower_toeplitz(col: np.ndarray) -> np.ndarray:
    n = len(col)
    idx = np.subtract.outer(np.arange(n), np.arange(n))
    return np.where(idx >= 0, col[np.clip(idx, 0, None)], 0.0)


def block_model_resolvent(n1: int, rho1: float, n2: int, zeta: complex) -> np.ndarray:
    """Block-diagonal resolvent for minimal polynomial ``(z - rho1)^n1 (z + 1)^n2``.

    The first block is the model resolvent of ``b_rho1^n1``; the second is
    the boundary limit ``I / (zeta + 1)`` of the unimodular zeros at ``-1``.
    """
    zeta = complex(zeta)
    if n1 < 1 or n2 < 1:
        raise OutOfDomain("block sizes must be positive")
    if not (0 <= rho1 < 1):
        raise OutOfDomain(f"rho1 must lie in [0, 1), got {rho1}")
    if abs(zeta + 1) < 1e-12:
        raise SpectrumCollision("zeta = -1 is in the unimodular block")
    A1 = model_resolvent(BlaschkeProduct.power(rho1, n1), zeta).matrix
    out = np.zeros((n1 + n2, n1 + n2), dtype=complex)
    out[:n1, :n1] = A1
    out[n1:, n1:] = np.eye(n2) / (zeta + 1)
    return out
