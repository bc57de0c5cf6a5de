"""The extremal analytic Toeplitz matrix ``X_{r, beta}``.

``X_{r, beta}`` is ``n x n`` lower triangular with ``r^(n-1)`` on the
diagonal and ``beta * r^(n-1-k)`` on the ``k``-th subdiagonal.  Its norm is
the largest eigenvalue magnitude of the symmetric Hankel matrix
``X J`` (columns reversed).  This module holds the construction, the dense
eigensolver route to the norm, the asymptotic value and upper bound, and
the determinant identities behind the characteristic equation.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import OutOfDomain


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    r: float
    beta: float

    def __post_init__(self):
        n, r, beta = int(self.n), float(self.r), float(self.beta)
        if n < 1:
            raise OutOfDomain(f"n must be >= 1, got {n}")
        if not (0 < r <= 1):
            raise OutOfDomain(f"r must lie in (0, 1], got {r}")
        if not (0 <= beta <= 2):
            raise OutOfDomain(f"beta must lie in [0, 2], got {beta}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "beta", beta)


def toeplitz_column(p: ExtremalParams) -> np.ndarray:
    """First column ``(r^(n-1), beta r^(n-2), ..., beta)``."""
    n, r, beta = p.n, p.r, p.beta
    col = beta * r ** (n - 1 - np.arange(n, dtype=float))
    col[0] = r ** (n - 1)
    return col


def build_X(p: ExtremalParams) -> np.ndarray:
    col = toeplitz_column(p)
    idx = np.subtract.outer(np.arange(p.n), np.arange(p.n))
    return np.where(idx >= 0, col[np.clip(idx, 0, None)], 0.0)


def hankel_flip(m) -> np.ndarray:
    """``m @ J``: reverse the column order."""
    a = linalg.as_matrix(m, square=True)
    return a[:, ::-1].copy()


def flipped_X(p: ExtremalParams) -> np.ndarray:
    return hankel_flip(build_X(p))


def xnorm_oracle(p: ExtremalParams) -> float:
    """``||X_{r, beta}||`` as the largest |eigenvalue| of the flipped matrix."""
    w, _ = linalg.hermitian_eigen(flipped_X(p))
    return float(abs(w[0]))


def xnorm_limit(r: float, beta: float) -> float:
    """Large-``n`` limit ``beta / (1 - r^2)``, valid for ``1 - r^2 <= beta <= 2``."""
    if not (0 < r < 1):
        raise OutOfDomain(f"r must lie in (0, 1), got {r}")
    if not (1 - r * r - 1e-12 <= beta <= 2):
        raise OutOfDomain(f"beta must lie in [1 - r^2, 2], got {beta}")
    return beta / (1 - r * r)


def xnorm_upper_bound(p: ExtremalParams, beta_max: float) -> float:
    """``beta_max / (1 - r^2)``, an upper bound for every ``n`` when
    ``1 - r^2 <= beta <= beta_max <= 2``."""
    r, beta = p.r, p.beta
    if not (0 < r < 1):
        raise OutOfDomain(f"r must lie in (0, 1), got {r}")
    if not (1 - r * r - 1e-12 <= beta <= beta_max + 1e-12 and beta_max <= 2):
        raise OutOfDomain(
            f"need 1 - r^2 <= beta <= beta_max <= 2, got beta={beta}, beta_max={beta_max}"
        )
    return beta_max / (1 - r * r)


def flipped_trace(p: ExtremalParams) -> float:
    return float(np.trace(flipped_X(p)))


# -- determinant identities -------------------------------------------------


def appendix_matrix(p: ExtremalParams, lam: float) -> np.ndarray:
    """``X~^2 - lam^2`` written column by column in closed form.

    The closed form lists the entries in reversed index order, i.e. it is
    ``J (X~^2 - lam^2) J``; the determinant is unaffected.  For ``i <= j``:

    * ``i == j``: ``-lam^2 + beta^2 r^(2(i-1)) (1 + r^2 + ... + r^(2(n-1-i))) + r^(2n-2)``
    * ``i < j``: ``beta^2 r^(i+j-2) (1 + ... + r^(2(n-1-j))) + beta r^(2n-2-(j-i))``
    """
    n, r, beta = p.n, p.r, p.beta
    A = np.empty((n, n))
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            geo = sum(r ** (2 * t) for t in range(n - j))
            if i == j:
                v = -lam * lam + beta**2 * r ** (2 * (i - 1)) * geo + r ** (2 * n - 2)
            else:
                v = beta**2 * r ** (i + j - 2) * geo + beta * r ** (2 * n - 2 - (j - i))
            A[i - 1, j - 1] = A[j - 1, i - 1] = v
    return A


def tridiagonal_entries(p: ExtremalParams, lam: float) -> dict[str, float]:
    """Entries of the tridiagonal matrix the determinant reduces to."""
    n, r, beta = p.n, p.r, p.beta
    t = lam * lam
    s = r ** (2 * n - 2)
    alpha = t * r + r ** (2 * n - 1) * (beta - 1)
    return {
        "alpha": alpha,
        "alpha_prime": alpha / r**2,
        "gamma": -t * (r + 1 / r) + s * (r + (beta - 1) ** 2 / r),
        "mu": t + s * (beta - 1),
        "y": -r * t + r ** (2 * n - 1),
    }


def reduce_to_tridiagonal(p: ExtremalParams, lam: float) -> tuple[np.ndarray, float]:
    """Apply the row/column operations that make ``J(X~^2 - lam^2)J`` tridiagonal.

    1. divide row ``k`` and column ``k`` by ``r^(k-1)``;
    2. replace column ``k-1`` by column ``k-1`` minus column ``k`` (``k = 2..n``);
    3. replace row ``k-1`` by row ``k-1`` minus row ``k`` (``k = 2..n``);
    4. multiply row ``k`` by ``r^(2k-1)``.

    Returns the reduced matrix and the factor ``f`` with
    ``det(reduced) = f * det(X~^2 - lam^2)``.
    """
    n, r = p.n, p.r
    A = appendix_matrix(p, lam)
    d = r ** -np.arange(n, dtype=float)
    A = A * d[:, None] * d[None, :]
    A[:, :-1] = A[:, :-1] - A[:, 1:]
    A[:-1, :] = A[:-1, :] - A[1:, :]
    scale = r ** (2 * np.arange(1, n + 1) - 1.0)
    A = A * scale[:, None]
    # steps 1 and 4 together scale the determinant by r^(n^2 - n(n-1)) = r^n
    return A, r**n


def chebyshev_u(k: int, x):
    """Chebyshev polynomial of the second kind ``U_k(x)`` (``U_{-1} = 0``)."""
    x = np.asarray(x, dtype=float)
    if k < 0:
        return np.zeros_like(x)
    u_prev, u = np.zeros_like(x), np.ones_like(x)
    for _ in range(k):
        u_prev, u = u, 2 * x * u - u_prev
    return u


def tridiagonal_toeplitz_det(k: int, diag: float, off: float) -> float:
    """Determinant of the ``k x k`` symmetric tridiagonal Toeplitz matrix.

    Computed by the three-term recurrence ``D_k = diag D_{k-1} - off^2 D_{k-2}``,
    which equals ``off^k U_k(diag / (2 off))`` when ``off != 0``.
    """
    d_prev, d = 1.0, 1.0
    if k == 0:
        return 1.0
    d = diag
    for _ in range(k - 1):
        d_prev, d = d, diag * d - off * off * d_prev
    return d


def char_polynomial(p: ExtremalParams, lam: float) -> float:
    """Left-hand side of the Chebyshev characteristic equation at ``lam``.

    ``r mu^(n+1) U_n(gamma/2mu) + mu^n (lam^2 - r^(2n-2)(beta-1)^2) U_(n-1)(gamma/2mu)``
    which equals ``r^(n+1) mu det(X~^2 - lam^2)``.
    """
    n, r, beta = p.n, p.r, p.beta
    e = tridiagonal_entries(p, lam)
    mu, gamma = e["mu"], e["gamma"]
    c = gamma / (2 * mu)
    return float(
        r * mu ** (n + 1) * chebyshev_u(n, c)
        + mu**n * (lam * lam - r ** (2 * n - 2) * (beta - 1) ** 2) * chebyshev_u(n - 1, c)
    )


def det_via_recurrence(p: ExtremalParams, lam: float) -> float:
    """``det(X~^2 - lam^2)`` from the tridiagonal form (valid also when ``mu = 0``)."""
    n, r = p.n, p.r
    e = tridiagonal_entries(p, lam)
    full = tridiagonal_toeplitz_det(n, e["gamma"], e["mu"])
    last = tridiagonal_toeplitz_det(n - 1, e["gamma"], e["mu"])
    return (full + (e["y"] - e["gamma"]) * last) / r**n


def _rel(a: float, b: float) -> float:
    m = max(abs(a), abs(b))
    return 0.0 if m == 0 else abs(a - b) / m


def appendix_det_identity(p: ExtremalParams, lam=None, count: int = 1, seed: int = 0) -> float:
    """Three-way check of ``det(X~^2 - lam^2)``.

    Compares the determinant of the explicitly built matrix, of the
    closed-form column matrix, and of the Chebyshev form divided by the
    tracked scale ``r^(n+1) mu``.  ``lam`` may be a number or a sequence;
    when omitted ``count`` values are drawn uniformly from
    ``(0, 2 ||X||)`` with the given seed.  Returns the largest pairwise
    relative discrepancy.
    """
    if lam is None:
        rng = np.random.default_rng(seed)
        lams = rng.uniform(0.0, 2.0 * xnorm_oracle(p), size=count)
    else:
        lams = np.atleast_1d(np.asarray(lam, dtype=float))
    Xt = flipped_X(p)
    sq = Xt @ Xt
    worst = 0.0
    for lm in lams:
        t = lm * lm
        direct = linalg.determinant(sq - t * np.eye(p.n)).real
        columns = linalg.determinant(appendix_matrix(p, lm)).real
        mu = tridiagonal_entries(p, lm)["mu"]
        cheb = char_polynomial(p, lm) / (p.r ** (p.n + 1) * mu)
        worst = max(worst, _rel(direct, columns), _rel(direct, cheb), _rel(columns, cheb))
    return float(worst)
