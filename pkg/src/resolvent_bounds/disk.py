"""Geometry of the closed unit disk.

Euclidean and pseudo-hyperbolic distances, the Stolz-type quantity ``s``,
finite Blaschke products, and the :class:`Spectrum` container that stores
eigenvalues together with their multiplicities.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BoundaryZero,
    DegeneratePair,
    OutOfDomain,
    PoleHit,
    SpectrumCollision,
)

SEPARATION_TOL = 1e-12
TIE_TOL = 1e-10
DISK_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Finite set of eigenvalues in the closed unit disk with multiplicities.

    ``points`` holds ``(eigenvalue, multiplicity)`` pairs with pairwise
    distinct eigenvalues.  The degree is the sum of multiplicities and plays
    the role of the degree of the minimal polynomial in every bound.
    """

    points: tuple[tuple[complex, int], ...]

    def __post_init__(self):
        pts = tuple((complex(z), int(m)) for z, m in self.points)
        if not pts:
            raise ValueError("a spectrum needs at least one point")
        for z, m in pts:
            if m < 1:
                raise ValueError(f"multiplicity must be positive, got {m}")
            if not np.isfinite(z):
                raise ValueError("eigenvalues must be finite")
            if abs(z) > 1 + DISK_TOL:
                raise OutOfDomain(f"eigenvalue {z} lies outside the closed disk")
        for i in range(len(pts)):
            for j in range(i):
                if abs(pts[i][0] - pts[j][0]) <= SEPARATION_TOL:
                    raise ValueError("repeated eigenvalue; merge it into a multiplicity")
        object.__setattr__(self, "points", pts)

    @classmethod
    def single(cls, value: complex, mult: int = 1) -> "Spectrum":
        return cls(((value, mult),))

    @classmethod
    def from_values(cls, values: Iterable[complex], tol: float = SEPARATION_TOL) -> "Spectrum":
        """Group a list of eigenvalues, merging entries closer than ``tol``."""
        pts: list[list] = []
        for z in values:
            z = complex(z)
            for p in pts:
                if abs(p[0] - z) <= tol:
                    p[1] += 1
                    break
            else:
                pts.append([z, 1])
        return cls(tuple((z, m) for z, m in pts))

    @property
    def values(self) -> np.ndarray:
        return np.array([z for z, _ in self.points], dtype=complex)

    @property
    def multiplicities(self) -> np.ndarray:
        return np.array([m for _, m in self.points], dtype=int)

    def degree(self) -> int:
        return int(sum(m for _, m in self.points))

    def conj(self) -> "Spectrum":
        return Spectrum(tuple((z.conjugate(), m) for z, m in self.points))

    def rotate(self, theta: float) -> "Spectrum":
        """Spectrum multiplied by ``exp(1j*theta)``."""
        w = np.exp(1j * theta)
        return Spectrum(tuple((w * z, m) for z, m in self.points))

    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.values)))

    def to_json(self) -> str:
        return json.dumps([{"re": z.real, "im": z.imag, "mult": m} for z, m in self.points])

    @classmethod
    def from_json(cls, text: str | Sequence[dict]) -> "Spectrum":
        data = json.loads(text) if isinstance(text, str) else text
        if not isinstance(data, list) or not data:
            raise ValueError("spectrum JSON must be a non-empty array of {re, im, mult}")
        pts = []
        for item in data:
            if not isinstance(item, dict) or "re" not in item:
                raise ValueError(f"bad spectrum entry {item!r}")
            z = complex(float(item["re"]), float(item.get("im", 0.0)))
            pts.append((z, int(item.get("mult", 1))))
        return cls(tuple(pts))


def euclid_dist(z: complex, w: complex) -> float:
    return abs(complex(z) - complex(w))


def pseudo_hyp_dist(z: complex, w: complex) -> float:
    """``|(z - w) / (1 - conj(z) w)|``."""
    z, w = complex(z), complex(w)
    den = 1 - z.conjugate() * w
    if abs(den) < 1e-14:
        raise DegeneratePair(f"1 - conj(z) w vanishes for z={z}, w={w}")
    return abs(z - w) / abs(den)


def _check_off_spectrum(zeta: complex, sigma: Spectrum) -> None:
    if np.min(np.abs(sigma.values - zeta)) < SEPARATION_TOL:
        raise SpectrumCollision(f"zeta={zeta} lies on the spectrum")


def dist_to_spectrum(zeta: complex, sigma: Spectrum, metric: str = "euclidean") -> float:
    """Distance from ``zeta`` to the closest spectral point.

    ``metric`` is ``"euclidean"`` or ``"pseudo_hyperbolic"``.
    """
    zeta = complex(zeta)
    _check_off_spectrum(zeta, sigma)
    if metric == "euclidean":
        return float(np.min(np.abs(sigma.values - zeta)))
    if metric in ("pseudo_hyperbolic", "pseudo-hyperbolic", "hyperbolic"):
        return min(pseudo_hyp_dist(zeta, lam) for lam in sigma.values)
    raise ValueError(f"unknown metric {metric!r}")


def stolz_s(zeta: complex, sigma: Spectrum) -> float:
    """Stolz-type quantity ``s(zeta, sigma)``.

    The maximum of ``(1 - |lam|^2) / |1 - conj(lam) zeta|`` over the points
    of ``sigma`` that realize the pseudo-hyperbolic distance to ``zeta``.
    Minimizers are collected within an absolute band of 1e-10.
    """
    zeta = complex(zeta)
    if abs(zeta) > 1 + DISK_TOL:
        raise OutOfDomain(f"|zeta| = {abs(zeta)} > 1")
    _check_off_spectrum(zeta, sigma)
    lams = sigma.values
    p = np.array([pseudo_hyp_dist(zeta, lam) for lam in lams])
    near = p <= p.min() + TIE_TOL
    vals = (1 - np.abs(lams[near]) ** 2) / np.abs(1 - lams[near].conj() * zeta)
    return float(max(0.0, vals.max()))


def d1_sigmabar_zeta(zeta: complex, sigma: Spectrum) -> float:
    """``min |1 - conj(lam) zeta|`` over the spectrum, i.e. ``d(1, conj(sigma) zeta)``."""
    return float(np.min(np.abs(1 - sigma.values.conj() * complex(zeta))))


def mobius(a: complex, z):
    """Disk automorphism ``b_a(z) = (z - a) / (1 - conj(a) z)``."""
    a = complex(a)
    return (z - a) / (1 - a.conjugate() * z)


@dataclass(frozen=True)
class BlaschkeProduct:
    """Finite Blaschke product with zeros strictly inside the unit disk."""

    zeros: tuple[complex, ...]

    def __post_init__(self):
        zs = tuple(complex(z) for z in self.zeros)
        if not zs:
            raise ValueError("a Blaschke product needs at least one zero")
        for z in zs:
            if not abs(z) < 1:
                raise BoundaryZero(f"zero {z} is not inside the open unit disk")
        object.__setattr__(self, "zeros", zs)

    @classmethod
    def power(cls, lam: complex, n: int) -> "BlaschkeProduct":
        """``b_lam ** n``."""
        return cls((complex(lam),) * n)

    @property
    def degree(self) -> int:
        return len(self.zeros)

    def factors(self, z: complex) -> np.ndarray:
        """Individual Mobius factors ``b_{nu_i}(z)``."""
        z = complex(z)
        nu = np.array(self.zeros)
        den = 1 - nu.conj() * z
        if np.min(np.abs(den)) < 1e-14:
            raise PoleHit(f"z={z} is a pole of the Blaschke product")
        return (z - nu) / den

    def __call__(self, z: complex) -> complex:
        return complex(np.prod(self.factors(z)))


def blaschke_eval(B: BlaschkeProduct, z: complex) -> complex:
    return B(z)
