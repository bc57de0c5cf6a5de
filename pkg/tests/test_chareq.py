import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from resolvent_bounds.chareq import (
    LEMMA_CASE_GRID,
    char_eq_relative_residual,
    cosh_minus_residual,
    cosh_plus_residual,
    count_trig_roots,
    endpoint_ties,
    lambda_sq_cosh_minus,
    lambda_sq_cosh_plus,
    lambda_sq_trig,
    lemma_case,
    lemma_case_grid,
    root_census,
    scan_trig_roots,
    solve_char_eq,
    solve_cosh_branches,
    threshold_pair,
    trig_residual,
    xnorm_char_eq,
    xnorm_limit_gap,
)
from resolvent_bounds.errors import DegenerateBeta, GridTooCoarse, HypothesisViolated
from resolvent_bounds.toeplitz import ExtremalParams, flipped_X, xnorm_oracle

regular_params = st.builds(
    ExtremalParams, st.integers(1, 12), st.floats(0.02, 1.0), st.floats(0.001, 2.0)
).filter(lambda p: abs(p.beta - (1 - p.r**2)) >= 1e-3)


def spectrum_sq(p):
    return np.sort(np.linalg.eigvalsh(flipped_X(p)) ** 2)


def test_char_eq_examples():
    assert xnorm_char_eq(ExtremalParams(3, 1, 2)) == pytest.approx(1 / math.tan(math.pi / 12), rel=1e-12)
    assert xnorm_char_eq(ExtremalParams(2, 1, 1)) == pytest.approx(1 / (2 * math.sin(math.pi / 10)), rel=1e-12)
    p = ExtremalParams(5, 0.6, 1.4)
    assert xnorm_char_eq(p) == pytest.approx(xnorm_oracle(p), rel=1e-8)


@pytest.mark.parametrize("r, beta", [(0.5, 0.75), (1.0, 0.0), (0.3, 0.0), (0.8, 0.36), (0.1, 0.99)])
def test_degenerate_reduction(r, beta):
    for n in (1, 2, 5, 11, 30):
        p = ExtremalParams(n, r, beta)
        res = solve_char_eq(p)
        assert res.method == "degenerate"
        assert res.census.degenerate_mu == n - 1
        assert np.sort(res.census.lambda_squares) == pytest.approx(spectrum_sq(p), rel=1e-9, abs=1e-14)
        with pytest.raises(DegenerateBeta):
            scan_trig_roots(p)
        with pytest.raises(DegenerateBeta):
            solve_cosh_branches(p)


def test_near_degenerate_band_falls_back():
    p = ExtremalParams(6, 0.5, 0.7505)
    res = solve_char_eq(p)
    assert res.method == "oracle_fallback"
    assert res.norm == pytest.approx(xnorm_oracle(p), rel=1e-12)


@given(regular_params)
def test_char_eq_matches_oracle(p):
    assert xnorm_char_eq(p) == pytest.approx(xnorm_oracle(p), rel=1e-8)


@given(regular_params)
def test_census_accounts_for_spectrum(p):
    c = root_census(p)
    assert c.total == p.n
    if p.n > 1:
        assert c.branch_total == p.n
    got = np.sort(c.lambda_squares)
    want = spectrum_sq(p)
    assert np.max(np.abs(got - want)) <= 1e-7 * max(1.0, want[-1])


@given(regular_params.filter(lambda p: p.n >= 2))
def test_trig_count_matches_case_tree(p):
    assert 2 * len(scan_trig_roots(p)) == count_trig_roots(p)


@pytest.mark.parametrize("case, p", lemma_case_grid(), ids=lambda v: str(v))
def test_lemma_grid(case, p):
    assert lemma_case(p) == case
    assert 2 * len(scan_trig_roots(p)) == count_trig_roots(p)


def test_grid_straddles_every_finite_threshold():
    for case, rows in LEMMA_CASE_GRID.items():
        for r, beta in {(r, b) for r, b, _ in rows}:
            ns = [n for rr, bb, n in rows if (rr, bb) == (r, beta)]
            p = ExtremalParams(1, r, beta)
            if case == "2b":
                ts = [beta / (2 * (2 - beta))]
            elif case in ("3a", "4a", "5", "3b", "4b-i"):
                ts = [t for t in threshold_pair(p) if 1 <= t < 100]
                ts = ts[:1] if case != "3b" else ts
            else:
                ts = []
            for t in ts:
                assert min(ns) <= t < max(ns), (case, r, beta, t, ns)


def test_count_examples():
    assert count_trig_roots(ExtremalParams(4, 1.0, 1.3)) == 8
    assert count_trig_roots(ExtremalParams(2, 0.4, 1.0)) == 2
    assert count_trig_roots(ExtremalParams(2, 0.3, 1.8)) == 0
    with pytest.raises(HypothesisViolated):
        count_trig_roots(ExtremalParams(3, 0.5, 0.75))
    with pytest.raises(HypothesisViolated):
        count_trig_roots(ExtremalParams(3, 0.5, 0.0))


def test_scan_examples():
    assert len(scan_trig_roots(ExtremalParams(2, 1, 2))) == 2
    assert len(scan_trig_roots(ExtremalParams(2, 0.4, 1))) == 1
    with pytest.raises(GridTooCoarse):
        scan_trig_roots(ExtremalParams(4, 0.5, 1.2), grid=16)


def test_threshold_order_in_case_3b():
    # the near-pi threshold is the smaller one throughout 1 + r < beta < 2
    for r in np.linspace(0.05, 0.95, 19):
        for beta in np.linspace(1 + r + 1e-3, 2 - 1e-3, 7):
            t_pi, t_0 = threshold_pair(ExtremalParams(1, r, beta))
            assert t_pi < t_0


@pytest.mark.parametrize("n", range(1, 8))
def test_tie_on_threshold_puts_root_at_endpoint(n):
    p = ExtremalParams(n, n / (n + 1), 1.0)  # n = r / (1 - r)
    assert endpoint_ties(p)[1]
    roots = scan_trig_roots(p)
    assert roots[-1] == math.pi
    assert 2 * len(roots) == count_trig_roots(p) == 2 * n
    assert np.sort(root_census(p).lambda_squares) == pytest.approx(spectrum_sq(p), rel=1e-9, abs=1e-14)


@pytest.mark.parametrize("n, r, beta", [(6, 0.7, 1.3), (9, 0.4, 0.6), (5, 0.9, 1.9), (7, 1.0, 0.7)])
def test_branch_roots_solve_their_equations(n, r, beta):
    p = ExtremalParams(n, r, beta)
    trig = scan_trig_roots(p)
    plus, minus = solve_cosh_branches(p)
    inner = trig[(trig > 1e-6) & (trig < math.pi - 1e-6)]
    assert np.all(np.abs(np.sin(p.n * inner) * np.sin(inner) * trig_residual(inner, p)) < 1e-12)
    if plus:
        assert np.all(np.abs(cosh_plus_residual(plus, p)) < 1e-9)
    if minus:
        assert np.all(np.abs(cosh_minus_residual(minus, p)) < 1e-9)
    lam_sq = np.concatenate([lambda_sq_trig(trig, p), lambda_sq_cosh_plus(plus, p), lambda_sq_cosh_minus(minus, p)])
    want = spectrum_sq(p)
    for t in lam_sq:
        assert np.min(np.abs(want - t)) <= 1e-8 * max(1.0, want[-1])
        assert char_eq_relative_residual(p, t) < 1e-9


def test_r_one_beta_two_has_no_hyperbolic_roots():
    for n in (1, 3, 8):
        assert solve_cosh_branches(ExtremalParams(n, 1.0, 2.0)) == ([], [])


def test_dominant_root_tends_to_limit():
    p = ExtremalParams(30, 0.3, 1.8)
    _, minus = solve_cosh_branches(p)
    assert max(minus) == pytest.approx(-math.log(0.3), abs=1e-12)
    assert xnorm_char_eq(p) == pytest.approx(1.8 / 0.91, rel=1e-14)


@pytest.mark.parametrize("n, r, beta", [(10, 0.5, 1.5), (15, 0.7, 0.9), (12, 0.9, 1.2), (3, 0.5, 1.5)])
def test_limit_gap_matches_difference_when_resolvable(n, r, beta):
    p = ExtremalParams(n, r, beta)
    gap = xnorm_limit_gap(p)
    assert gap == pytest.approx(beta / (1 - r * r) - xnorm_oracle(p), rel=1e-6, abs=1e-14)


def test_limit_gap_against_multiprecision():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 60
    for n, r, beta in [(20, 0.5, 1.5), (30, 0.5, 1.5), (25, 0.3, 1.8)]:
        X = mp.matrix(n, n)
        for i in range(n):
            for j in range(n):
                k = n - 1 - j  # column of X that lands in column j of X J
                if i >= k:
                    X[i, j] = mp.mpf(r) ** (n - 1) if i == k else mp.mpf(beta) * mp.mpf(r) ** (n - 1 - (i - k))
        lam = max(abs(e) for e in mp.eigsy(X, eigvals_only=True))
        exact = mp.mpf(beta) / (1 - mp.mpf(r) ** 2) - lam
        assert float(abs(xnorm_limit_gap(ExtremalParams(n, r, beta)) - exact) / exact) < 1e-12
