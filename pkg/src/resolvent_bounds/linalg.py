"""Dense complex linear algebra used throughout the package.

Matrices are plain :class:`numpy.ndarray` objects (real or complex, 2-D).
The routines here validate their inputs and delegate the heavy lifting to
LAPACK through numpy.
"""
from __future__ import annotations

import numpy as np

from .errors import NonFinite, NotHermitian, NotSquare, SpectrumCollision

HERMITIAN_TOL = 1e-12
COLLISION_TOL = 1e-12


def as_matrix(m, *, square: bool = False) -> np.ndarray:
    """Return ``m`` as a finite 2-D array, raising on malformed input."""
    a = np.asarray(m)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2:
        raise NotSquare(f"expected a 2-D matrix, got shape {a.shape}")
    if not np.issubdtype(a.dtype, np.number):
        a = a.astype(complex)
    if not np.all(np.isfinite(a)):
        raise NonFinite("matrix has NaN or Inf entries")
    if square and a.shape[0] != a.shape[1]:
        raise NotSquare(f"expected a square matrix, got shape {a.shape}")
    return a


def spectral_norm(m) -> float:
    """Largest singular value of ``m``."""
    a = as_matrix(m)
    if a.size == 0:
        return 0.0
    return float(np.linalg.norm(a, 2))


def hermitian_eigen(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix.

    Returns
    -------
    values : (n,) float array
        Real eigenvalues, sorted by decreasing magnitude.
    vectors : (n, n) array
        Orthonormal eigenvectors; ``vectors[:, k]`` belongs to ``values[k]``.
    """
    a = as_matrix(m, square=True)
    if np.max(np.abs(a - a.conj().T), initial=0.0) > HERMITIAN_TOL:
        raise NotHermitian("matrix is not Hermitian within 1e-12")
    w, v = np.linalg.eigh(a)
    order = np.argsort(-np.abs(w), kind="stable")
    return w[order], v[:, order]


def eigenvalues(m) -> np.ndarray:
    """All eigenvalues of a square matrix, as a complex array."""
    a = as_matrix(m, square=True)
    return np.linalg.eigvals(a).astype(complex)


def resolvent(m, zeta: complex) -> np.ndarray:
    """Return ``(zeta I - m)^{-1}``.

    Raises :class:`SpectrumCollision` when ``zeta`` is within 1e-12 of an
    eigenvalue of ``m``.
    """
    a = as_matrix(m, square=True)
    n = a.shape[0]
    ev = eigenvalues(a)
    if n and np.min(np.abs(ev - zeta)) < COLLISION_TOL:
        raise SpectrumCollision(f"zeta={zeta!r} is an eigenvalue of the matrix")
    shifted = zeta * np.eye(n, dtype=complex) - a
    if np.allclose(np.triu(a, 1), 0.0, rtol=0.0, atol=0.0):
        # triangular solves are more accurate than LU for the model matrices
        from scipy.linalg import solve_triangular

        return solve_triangular(shifted, np.eye(n, dtype=complex), lower=True)
    return np.linalg.solve(shifted, np.eye(n, dtype=complex))


def determinant(m) -> complex:
    """Determinant by partial-pivoting LU."""
    a = as_matrix(m, square=True)
    return complex(np.linalg.det(a))
