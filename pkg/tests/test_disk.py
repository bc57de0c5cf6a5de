import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from resolvent_bounds.disk import (
    BlaschkeProduct,
    Spectrum,
    blaschke_eval,
    d1_sigmabar_zeta,
    dist_to_spectrum,
    euclid_dist,
    mobius,
    pseudo_hyp_dist,
    stolz_s,
)
from resolvent_bounds.errors import BoundaryZero, DegeneratePair, OutOfDomain, PoleHit, SpectrumCollision


def disk_point(max_r=0.99):
    return st.builds(
        lambda rad, ang: rad * np.exp(1j * ang),
        st.floats(0, max_r),
        st.floats(0, 2 * np.pi),
    )


def test_distances():
    assert euclid_dist(0, 0.5) == 0.5
    assert euclid_dist(0.3j, 0.3j) == 0
    assert euclid_dist(1, -1) == 2
    assert pseudo_hyp_dist(0, 0.4 + 0.3j) == pytest.approx(0.5)
    assert pseudo_hyp_dist(0.5, 0.5) == 0
    assert pseudo_hyp_dist(0.5, -0.5) == pytest.approx(0.8)
    with pytest.raises(DegeneratePair):
        pseudo_hyp_dist(1, 1)


def test_dist_to_spectrum():
    assert dist_to_spectrum(0, Spectrum.single(0.5)) == 0.5
    sig = Spectrum(((0.3, 1), (0.8j, 2)))
    assert dist_to_spectrum(0, sig, "pseudo_hyperbolic") == pytest.approx(0.3)
    assert dist_to_spectrum(0.5, Spectrum.single(-0.5), "pseudo_hyperbolic") == pytest.approx(0.8)
    with pytest.raises(SpectrumCollision):
        dist_to_spectrum(0.3, sig)


def test_stolz_examples():
    assert stolz_s(0, Spectrum.single(0.5)) == pytest.approx(0.75)
    assert stolz_s(0, Spectrum.single(1j)) == pytest.approx(0.0)
    r = 0.35
    assert stolz_s(0, Spectrum.single(-r, 3)) == pytest.approx(1 - r * r)
    with pytest.raises(OutOfDomain):
        stolz_s(1.5, Spectrum.single(0))


def test_stolz_uses_only_nearest_points():
    sig = Spectrum(((0.0, 1), (0.9, 1)))
    # zeta = 0.8 is closest (pseudo-hyperbolically) to 0.9
    assert stolz_s(0.8, sig) == pytest.approx((1 - 0.81) / (1 - 0.72))


def test_d1():
    assert d1_sigmabar_zeta(0, Spectrum(((0.2, 1), (0.5j, 1)))) == 1
    assert d1_sigmabar_zeta(0.5, Spectrum.single(-0.4)) == pytest.approx(1.2)
    assert d1_sigmabar_zeta(1, Spectrum.single(0.6)) == pytest.approx(0.4)


def test_blaschke():
    B = BlaschkeProduct((0,))
    assert blaschke_eval(B, 0.3 + 0.1j) == pytest.approx(0.3 + 0.1j)
    assert blaschke_eval(BlaschkeProduct((0.4j,)), 0.4j) == 0
    assert blaschke_eval(BlaschkeProduct.power(0.5, 2), 0) == pytest.approx(0.25)
    with pytest.raises(BoundaryZero):
        BlaschkeProduct((1.0,))
    with pytest.raises(PoleHit):
        BlaschkeProduct((0.5,))(2.0)


def test_spectrum_validation_and_json():
    with pytest.raises(OutOfDomain):
        Spectrum.single(1.1)
    with pytest.raises(ValueError):
        Spectrum(((0.5, 1), (0.5, 2)))
    with pytest.raises(ValueError):
        Spectrum.single(0.5, 0)
    sig = Spectrum(((0.25 - 0.5j, 2), (1.0, 1)))
    assert Spectrum.from_json(sig.to_json()) == sig
    assert json.loads(sig.to_json())[0] == {"re": 0.25, "im": -0.5, "mult": 2}
    assert sig.degree() == 3
    assert Spectrum.from_values([0.1, 0.1, 0.2]).multiplicities.tolist() == [2, 1]


@given(disk_point(), disk_point(), disk_point())
def test_pseudo_hyp_symmetric_and_mobius_invariant(a, z, w):
    d = pseudo_hyp_dist(z, w)
    assert d == pytest.approx(pseudo_hyp_dist(w, z), abs=1e-12)
    assert pseudo_hyp_dist(mobius(a, z), mobius(a, w)) == pytest.approx(d, abs=1e-9)


@given(st.lists(disk_point(0.999), min_size=1, max_size=5, unique=True), disk_point(1.0))
def test_stolz_bounded(points, zeta):
    try:
        sig = Spectrum.from_values(points)
        s = stolz_s(zeta, sig)
    except SpectrumCollision:
        return
    assert 0 <= s <= 1 + sig.spectral_radius() + 1e-9 <= 2 + 1e-9


@given(st.lists(disk_point(0.95), min_size=1, max_size=6))
def test_blaschke_unimodular_on_circle(zeros):
    B = BlaschkeProduct(tuple(zeros))
    for t in np.linspace(0, 2 * np.pi, 64, endpoint=False):
        assert abs(B(np.exp(1j * t))) == pytest.approx(1.0, abs=1e-12)


@given(st.lists(disk_point(0.95), min_size=1, max_size=4, unique=True), disk_point(0.99))
def test_rotation_reduction(points, zeta):
    sig = Spectrum.from_values(points)
    if np.min(np.abs(sig.values - zeta)) < 1e-6 or abs(zeta) < 1e-9:
        return
    th = np.angle(zeta)
    a = dist_to_spectrum(zeta, sig, "pseudo_hyperbolic")
    b = dist_to_spectrum(abs(zeta), sig.rotate(-th), "pseudo_hyperbolic")
    assert a == pytest.approx(b, abs=1e-12)
