"""Resolvent bounds for contractions with prescribed spectrum.

For a contraction ``T`` with spectrum ``sigma`` and minimal polynomial of
degree ``m`` the bounds evaluated here are

* ``bound_theorem1``: ``||X_{r, beta}|| / (d(1, conj(sigma) zeta) r^m)`` with
  ``r`` the pseudo-hyperbolic distance from ``zeta`` to ``sigma`` and
  ``beta`` the Stolz value ``s(zeta, sigma)``,
* ``bound_theorem3``: the closed-form relaxation
  ``1 / (d(1, conj(sigma) zeta) r^m (1 - r |zeta|))``,
* ``bound_prop2``: ``1 / dist(zeta, sigma)`` for unimodular spectra,

together with the extremal witnesses that make them sharp and an empirical
audit over random contractions.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import linalg
from .chareq import solve_char_eq
from .disk import (
    DISK_TOL,
    BlaschkeProduct,
    Spectrum,
    d1_sigmabar_zeta,
    dist_to_spectrum,
    stolz_s,
)
from .errors import (
    NoRootFound,
    NotUnimodular,
    NotUnimodularZeta,
    OutOfDomain,
    SpectrumCollision,
)
from .model import block_model_resolvent, extremal_T_star, model_matrix
from .toeplitz import ExtremalParams, xnorm_oracle

UNIMODULAR_TOL = 1e-10
CERTIFY_TOL = 1e-8
AUDIT_REL_TOL = 1e-8
THREADS_ENV = "RESOLVENT_BOUNDS_THREADS"


@dataclass
class BoundReport:
    """Value of one bound with every ingredient needed to rebuild it.

    Fields that do not enter a given bound are ``None``.
    """

    zeta: complex
    r: float | None
    beta: float | None
    d1: float | None
    deg: int
    xnorm: float | None
    bound_value: float
    method: str
    xnorm_method: str | None

    def reconstruct(self) -> float:
        """Recompute ``bound_value`` from the stored ingredients."""
        if self.method == "theorem1":
            return self.xnorm / (self.d1 * self.r**self.deg)
        if self.method == "theorem3":
            return 1.0 / (self.d1 * self.r**self.deg * (1 - self.r * abs(self.zeta)))
        if self.method == "prop2":
            return 1.0 / self.d1
        if self.method == "prop5":
            return max(1.0, self.xnorm)
        if self.method == "theorem4":
            return self.xnorm / self.r**self.deg
        raise ValueError(f"unknown method {self.method!r}")

    def to_dict(self) -> dict:
        out = asdict(self)
        out["zeta"] = {"re": self.zeta.real, "im": self.zeta.imag}
        return out


# -- norm of X with method priority ------------------------------------------


def xnorm_with_method(n: int, r: float, beta: float) -> tuple[float, str]:
    """``||X_{r, beta}||`` and the method used.

    Closed forms first (``beta = 1 - r^2``, or ``r = 1`` with ``beta`` in
    ``{0, 1, 2}``), then the characteristic equation, then the eigensolver.
    """
    tol = 1e-12
    if abs(beta - (1 - r * r)) <= tol:
        return 1.0, "closed_form"
    if abs(r - 1) <= tol:
        if abs(beta) <= tol:
            return 1.0, "closed_form"
        if abs(beta - 1) <= tol:
            return 1 / (2 * math.sin(math.pi / (4 * n + 2))), "closed_form"
        if abs(beta - 2) <= tol:
            return 1 / math.tan(math.pi / (4 * n)), "closed_form"
    p = ExtremalParams(n, r, beta)
    try:
        res = solve_char_eq(p)
    except NoRootFound:
        return xnorm_oracle(p), "oracle"
    return res.norm, "oracle" if res.method == "oracle_fallback" else "char_eq"


def _clamp_beta(beta: float) -> float:
    # the Stolz value is at most 2 on the closed disk; trim rounding overshoot
    if beta > 2 + 1e-9:
        raise OutOfDomain(f"Stolz value {beta} exceeds 2")
    return min(beta, 2.0)


def _check_closed_disk(zeta: complex) -> None:
    if abs(zeta) > 1 + DISK_TOL:
        raise OutOfDomain(f"|zeta| = {abs(zeta)} exceeds 1")


# -- bounds -------------------------------------------------------------------


def bound_theorem1(
    sigma: Spectrum,
    zeta: complex,
    *,
    deg: int | None = None,
    conservative_beta: bool = False,
) -> BoundReport:
    """Bound on ``||R(zeta, T)||`` through the norm of ``X_{r, beta}``.

    Parameters
    ----------
    sigma : Spectrum
        Spectrum of ``T`` with multiplicities taken from its minimal polynomial.
    zeta : complex
        Point of the closed unit disk off the spectrum.
    deg : int, optional
        Degree used for ``r^deg`` and the size of ``X``; defaults to
        ``sigma.degree()``.  Any larger value gives a weaker valid bound.
    conservative_beta : bool
        Use ``beta = 2`` in place of the Stolz value.
    """
    zeta = complex(zeta)
    _check_closed_disk(zeta)
    r = dist_to_spectrum(zeta, sigma, "pseudo_hyperbolic")
    beta = 2.0 if conservative_beta else _clamp_beta(stolz_s(zeta, sigma))
    d1 = d1_sigmabar_zeta(zeta, sigma)
    m = sigma.degree() if deg is None else int(deg)
    r = min(r, 1.0)
    xn, how = xnorm_with_method(m, r, beta)
    return BoundReport(zeta, r, beta, d1, m, xn, xn / (d1 * r**m), "theorem1", how)


def bound_theorem3(sigma: Spectrum, zeta: complex, *, deg: int | None = None) -> BoundReport:
    """Closed-form bound ``1 / (d(1, conj(sigma) zeta) r^m (1 - r |zeta|))`` for ``|zeta| < 1``."""
    zeta = complex(zeta)
    if not abs(zeta) < 1:
        raise OutOfDomain(f"need |zeta| < 1, got {abs(zeta)}")
    r = dist_to_spectrum(zeta, sigma, "pseudo_hyperbolic")
    beta = _clamp_beta(stolz_s(zeta, sigma))
    d1 = d1_sigmabar_zeta(zeta, sigma)
    m = sigma.degree() if deg is None else int(deg)
    value = 1.0 / (d1 * r**m * (1 - r * abs(zeta)))
    # xnorm slot holds the beta_max / (1 - r^2) cap that replaces ||X||
    beta_max = (1 - r * r) / (1 - r * abs(zeta))
    cap = beta_max / (1 - r * r) if r < 1 else None
    return BoundReport(zeta, r, beta, d1, m, cap, value, "theorem3", None)


def bound_prop2(sigma: Spectrum, zeta: complex) -> BoundReport:
    """``1 / dist(zeta, sigma)`` for a spectrum on the unit circle; ``zeta`` anywhere off it."""
    zeta = complex(zeta)
    mods = np.abs(sigma.values)
    if np.max(np.abs(mods - 1)) > UNIMODULAR_TOL:
        raise NotUnimodular("every spectral point must lie on the unit circle")
    d = dist_to_spectrum(zeta, sigma)
    return BoundReport(zeta, None, None, d, sigma.degree(), None, 1.0 / d, "prop2", None)


def bound_prop5(sigma1: Spectrum, zeta: complex) -> BoundReport:
    """Report form of :func:`ds_constant_bound`."""
    value, _, s, xn, how = _ds_bound_parts(sigma1, complex(zeta))
    return BoundReport(complex(zeta), 1.0, s, None, sigma1.degree(), xn, value, "prop5", how)


# -- extremal witnesses -------------------------------------------------------


@dataclass
class Witness:
    """Extremal value together with the matrix that attains it."""

    value: float
    witness: np.ndarray | None
    attained: float | None = None
    rel_gap: float | None = None
    details: dict = field(default_factory=dict)


def sup_resolvent_R(zeta: complex, r: float, n: int, *, certify: bool = True) -> Witness:
    """Largest ``d(1, conj(sigma)|zeta|) ||R(zeta, T)||`` over contractions with
    ``n`` eigenvalues at pseudo-hyperbolic distance at least ``r`` from ``zeta``.

    The value is ``||X_{r, beta_max}|| / r^n`` with
    ``beta_max = (1 - r^2) / (1 - r |zeta|)``; the supremum is attained by the
    model operator of ``b_lam^n``, ``lam = (|zeta| - r) / (1 - r |zeta|)``,
    evaluated at ``|zeta|``.
    """
    zeta = complex(zeta)
    if not abs(zeta) < 1:
        raise OutOfDomain(f"need |zeta| < 1, got {abs(zeta)}")
    if not (0 < r < 1):
        raise OutOfDomain(f"r must lie in (0, 1), got {r}")
    if n < 1:
        raise OutOfDomain("n must be positive")
    a = abs(zeta)
    beta_max = (1 - r * r) / (1 - r * a)
    lam = (a - r) / (1 - r * a)
    xn, how = xnorm_with_method(n, r, min(beta_max, 2.0))
    value = xn / r**n
    out = Witness(value, None, details={"beta_max": beta_max, "lambda_max": lam, "xnorm_method": how})
    if certify:
        M = model_matrix(BlaschkeProduct.power(lam, n))
        attained = abs(1 - lam * a) * linalg.spectral_norm(linalg.resolvent(M, a))
        out.witness = M
        out.attained = attained
        out.rel_gap = abs(attained - value) / value
    return out


def _ds_bound_parts(sigma1: Spectrum, zeta: complex):
    if abs(abs(zeta) - 1) > 1e-12:
        raise NotUnimodularZeta(f"|zeta| = {abs(zeta)} is not 1")
    if np.max(np.abs(sigma1.values)) >= 1:
        raise OutOfDomain("sigma1 must lie in the open unit disk")
    s = _clamp_beta(stolz_s(zeta, sigma1))
    n1 = sigma1.degree()
    xn, how = xnorm_with_method(n1, 1.0, s)
    cap = 1 / math.tan(math.pi / (4 * n1))
    return max(1.0, xn), cap, s, xn, how


def ds_constant_bound(n1: int, sigma1: Spectrum, zeta: complex) -> tuple[float, float]:
    """Bound on ``d(zeta, sigma) ||R(zeta, T)||`` on the unit circle.

    Returns ``(max(1, ||X_{1, s(zeta, sigma1)}||), cot(pi / (4 n1)))``, the
    bound and its spectrum-free cap, with ``X`` of size ``n1``.
    """
    if sigma1.degree() != n1:
        raise OutOfDomain(f"sigma1 has degree {sigma1.degree()}, expected {n1}")
    value, cap, *_ = _ds_bound_parts(sigma1, complex(zeta))
    return value, cap


def ds_constant_sup(n1: int, n2: int, rho1: float, *, certify: bool = True) -> Witness:
    """Supremum ``||X_{1, 1 + rho1}||`` (size ``n1``) over the polynomial class
    ``(z - rho1)^n1 (z + 1)^n2``, certified on the block witness at ``zeta = 1``."""
    if n1 < 1 or n2 < 1:
        raise OutOfDomain("block sizes must be positive")
    if not (0 <= rho1 < 1):
        raise OutOfDomain(f"rho1 must lie in [0, 1), got {rho1}")
    xn, how = xnorm_with_method(n1, 1.0, 1 + rho1)
    out = Witness(xn, None, details={"xnorm_method": how, "cap": 1 / math.tan(math.pi / (4 * n1))})
    if certify:
        R = block_model_resolvent(n1, rho1, n2, 1.0)
        d = min(1 - rho1, 2.0)
        attained = d * linalg.spectral_norm(R)
        expected = max(xn, (1 - rho1) / 2)
        out.witness = R
        out.attained = attained
        out.rel_gap = abs(attained - expected) / expected
        out.details["expected_block_max"] = expected
    return out


def certify_sharpness_theorem1(lam: float, n: int, zeta: float) -> float:
    """Relative gap between the bound on ``sigma = {lam}^n`` and the resolvent
    norm of the extremal contraction with that minimal polynomial."""
    lam, zeta = float(lam), float(zeta)
    if not (-1 <= zeta <= 1):
        raise OutOfDomain(f"zeta must lie in [-1, 1], got {zeta}")
    if abs(zeta - lam) < 1e-12:
        raise SpectrumCollision(f"zeta = lambda = {lam}")
    T = extremal_T_star(lam, n)
    actual = linalg.spectral_norm(linalg.resolvent(T, zeta))
    bound = bound_theorem1(Spectrum.single(lam, n), zeta).bound_value
    return abs(bound - actual) / bound


# -- audit --------------------------------------------------------------------


@dataclass
class AuditSummary:
    n: int
    trials: int
    seed: int
    kind: str
    violations: int = 0
    checks: dict = field(default_factory=dict)
    max_ratio: dict = field(default_factory=dict)
    mean_ratio: dict = field(default_factory=dict)
    tight: dict = field(default_factory=dict)
    ratios: dict = field(default_factory=dict, repr=False)

    def to_dict(self, with_ratios: bool = False) -> dict:
        out = asdict(self)
        if not with_ratios:
            out.pop("ratios")
        return out


AUDIT_KINDS = ("gaussian", "unimodular_diagonal", "unitary", "extremal")


def _sample_matrix(rng: np.random.Generator, n: int, kind: str) -> np.ndarray:
    if kind == "gaussian":
        G = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        return G / (linalg.spectral_norm(G) * (1 + 1e-9))
    if kind == "unimodular_diagonal":
        return np.diag(np.exp(2j * np.pi * rng.random(n)))
    if kind == "unitary":
        from scipy.stats import unitary_group

        return unitary_group.rvs(n, random_state=rng) if n > 1 else np.exp(2j * np.pi * rng.random((1, 1)))
    if kind == "extremal":
        return extremal_T_star(float(rng.uniform(-0.95, 0.95)), n).astype(complex)
    raise ValueError(f"unknown audit kind {kind!r}")


def _sample_zeta(rng, sigma: Spectrum, *, real: bool, boundary: bool, interior_only: bool):
    lams = sigma.values
    for _ in range(10_000):
        if real:
            z = complex(rng.uniform(-1, 1))
        elif boundary:
            z = complex(np.exp(2j * np.pi * rng.random()))
        else:
            rad = math.sqrt(rng.random()) * (1 - 1e-9 if interior_only else 1)
            z = rad * complex(np.exp(2j * np.pi * rng.random()))
        if np.min(np.abs(lams - z)) < 1e-6:
            continue
        if dist_to_spectrum(z, sigma, "pseudo_hyperbolic") < 0.05:
            continue
        return z
    return None


def _audit_trial(n: int, kind: str, seq: np.random.SeedSequence) -> dict:
    rng = np.random.default_rng(seq)
    T = _sample_matrix(rng, n, kind)
    out: dict = {}
    if kind in ("unimodular_diagonal", "unitary"):
        sigma = Spectrum.from_values(np.diag(T) if kind == "unimodular_diagonal" else linalg.eigenvalues(T), tol=0.0)
        z = complex(rng.standard_normal() + 1j * rng.standard_normal()) * 2
        if np.min(np.abs(sigma.values - z)) < 1e-6:
            return out
        # eigenvalues of a computed unitary sit within rounding of the circle
        sigma = Spectrum(tuple((v / abs(v), m) for v, m in sigma.points))
        actual = linalg.spectral_norm(linalg.resolvent(T, z))
        out["prop2"] = actual * dist_to_spectrum(z, sigma)
        return out
    lams = linalg.eigenvalues(T) if kind == "gaussian" else np.full(n, T[0, 0])
    sigma = Spectrum.from_values(lams, tol=0.0) if kind == "gaussian" else Spectrum.single(T[0, 0].real, n)
    boundary = rng.random() < 0.1
    z = _sample_zeta(rng, sigma, real=(kind == "extremal"), boundary=boundary, interior_only=False)
    if z is None:
        return out
    actual = linalg.spectral_norm(linalg.resolvent(T, z))
    b1 = bound_theorem1(sigma, z, deg=n).bound_value
    out["theorem1"] = actual / b1
    if abs(z) < 1:
        out["theorem3"] = actual / bound_theorem3(sigma, z, deg=n).bound_value
    return out


def audit_threads() -> int:
    """Worker count from ``RESOLVENT_BOUNDS_THREADS`` (default: CPU count, at most 8)."""
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return max(1, min(8, os.cpu_count() or 1))


def random_contraction_audit(
    n: int,
    trials: int,
    seed: int,
    *,
    kind: str = "gaussian",
    threads: int | None = None,
) -> AuditSummary:
    """Check the bounds on random contractions; every ratio ``||R|| / bound`` must be ``<= 1``.

    Trial ``k`` draws from the ``k``-th child of ``SeedSequence(seed)``, so
    the summary is identical for any thread count.

    Parameters
    ----------
    kind : {"gaussian", "unimodular_diagonal", "unitary", "extremal"}
        ``gaussian`` normalizes a complex Gaussian matrix; the unimodular
        kinds (diagonal and Haar unitary) exercise the unit-circle bound; ``extremal`` draws the sharp
        contraction for a random ``lam`` and real ``zeta``.
    """
    if not (1 <= n <= 16):
        raise OutOfDomain(f"n must lie in 1..16, got {n}")
    if trials < 1:
        raise OutOfDomain("trials must be positive")
    if kind not in AUDIT_KINDS:
        raise ValueError(f"unknown audit kind {kind!r}")
    seqs = np.random.SeedSequence(seed).spawn(trials)
    workers = threads or audit_threads()
    if workers == 1:
        results = [_audit_trial(n, kind, s) for s in seqs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda s: _audit_trial(n, kind, s), seqs))
    summary = AuditSummary(n, trials, seed, kind)
    for name in ("theorem1", "theorem3", "prop2"):
        vals = [res[name] for res in results if name in res]
        if not vals:
            continue
        arr = np.array(vals)
        summary.ratios[name] = vals
        summary.checks[name] = len(vals)
        summary.violations += int(np.sum(arr > 1 + AUDIT_REL_TOL))
        summary.max_ratio[name] = float(arr.max())
        summary.mean_ratio[name] = float(arr.mean())
        summary.tight[name] = int(np.sum(arr > 1 - CERTIFY_TOL))
    return summary
