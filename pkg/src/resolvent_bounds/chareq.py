"""Norm of ``X_{r, beta}`` from its Chebyshev characteristic equation.

The squared eigenvalues ``t = lam^2`` of the flipped matrix ``X~ = X J`` are
the roots of

    r mu^(n+1) U_n(c) + mu^n (t - r^(2n-2) (beta-1)^2) U_(n-1)(c) = 0,
    mu = t + r^(2n-2)(beta-1),   c = gamma / (2 mu),

and ``c`` is a Mobius function of ``t``.  Eliminating ``t`` gives one
equation in ``c``,

    U_n(c) + K(c) U_(n-1)(c) = 0,   K(c) = ((2-beta) r + 2(1-beta) c) / (r^2+beta-1),

whose ``n`` real roots split into three branches:

* ``c = cos(theta)``, ``theta`` in ``(0, pi)`` (the trigonometric branch),
* ``c = cosh(theta)`` (the ``+cosh`` branch),
* ``c = -cosh(theta)`` (the ``-cosh`` branch).

Each branch root maps back to ``t`` in closed form.  The number of
trigonometric roots is predicted by a case analysis in ``(r, beta, n)``
(:func:`count_trig_roots`) and found by bracketing (:func:`scan_trig_roots`).

The hyperbolic branches are solved in the variable ``w = r exp(theta)``, in
which they read

    (w -/+ 1)(w -/+ (1-beta)) / w + (E / r^2) w q^n (1-q) / (1-q^n) = 0,
    q = r^2 / w^2,  E = r^2 + beta - 1,

(upper signs for ``-cosh``).  The dominant root of the ``-cosh`` branch sits
within ``O(r^(2n))`` of ``w = 1``, so that branch is bisected in
``u = w - 1`` to keep full relative precision of the small quantity that
sets ``lam^2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateBeta, GridTooCoarse, HypothesisViolated, NoRootFound
from .toeplitz import ExtremalParams, char_polynomial, xnorm_oracle

EQ_TOL = 1e-12
NEAR_DEGENERATE_BAND = 1e-3
PROBES_PER_BRANCH = 32


@dataclass
class RootCensus:
    """Bookkeeping of the characteristic-equation roots for one ``(n, r, beta)``.

    ``predicted_count`` counts trigonometric solutions in ``[-pi, pi)`` (twice
    the number in ``(0, pi)``); ``None`` when the case analysis does not
    apply.  ``lambda_squares`` lists every recovered ``lam^2``, including
    ``degenerate_mu`` copies of the ``mu = 0`` root.
    """

    predicted_count: int | None
    found_trig: list[float] = field(default_factory=list)
    found_cosh_plus: list[float] = field(default_factory=list)
    found_cosh_minus: list[float] = field(default_factory=list)
    lambda_squares: list[float] = field(default_factory=list)
    degenerate_mu: int = 0
    lemma_case: str | None = None
    # u = w - 1 for each -cosh root, kept for the cancellation-free limit gap
    minus_u: list[float] = field(default_factory=list, repr=False)

    @property
    def total(self) -> int:
        """Number of recovered ``lam^2`` values (``n`` once the census is complete)."""
        return len(self.lambda_squares)

    @property
    def branch_total(self) -> int:
        return (
            len(self.found_trig)
            + len(self.found_cosh_plus)
            + len(self.found_cosh_minus)
            + self.degenerate_mu
        )

    def as_dict(self) -> dict:
        return {
            "lemma_case": self.lemma_case,
            "predicted_count": self.predicted_count,
            "found_trig": list(map(float, self.found_trig)),
            "found_cosh_plus": list(map(float, self.found_cosh_plus)),
            "found_cosh_minus": list(map(float, self.found_cosh_minus)),
            "degenerate_mu": self.degenerate_mu,
            "lambda_squares": list(map(float, self.lambda_squares)),
        }


def _eq_excess(p: ExtremalParams) -> float:
    return p.r * p.r + p.beta - 1


def is_degenerate(p: ExtremalParams, tol: float = EQ_TOL) -> bool:
    """``beta == 0`` or ``beta == 1 - r^2``: the Chebyshev argument is constant in ``t``."""
    return abs(_eq_excess(p)) <= tol or p.beta <= tol


# -- case analysis ------------------------------------------------------------


def _thresholds(r: float, beta: float) -> tuple[float, float]:
    """Limits of ``n / ratio`` at ``theta -> pi`` and ``theta -> 0``.

    ``upper`` governs the root near ``pi`` and ``lower`` the root near ``0``.
    """
    e = beta - 1 + r * r
    den_pi = (1 - r) * (r + beta - 1)
    den_0 = (1 + r) * (beta - 1 - r)
    upper = e / den_pi if den_pi != 0 else math.inf
    lower = e / den_0 if den_0 != 0 else math.inf
    return upper, lower


def lemma_case(p: ExtremalParams, tol: float = EQ_TOL) -> str:
    """Label of the root-count case that applies to ``p``."""
    r, beta = p.r, p.beta
    if not (0 < beta <= 2) or abs(_eq_excess(p)) <= tol:
        raise HypothesisViolated(
            f"root count needs beta in (0, 2] and beta - 1 + r^2 != 0 (r={r}, beta={beta})"
        )
    if abs(r - 1) <= tol:
        return "1"
    if abs(r - abs(beta - 1)) <= tol:
        return "2a" if beta < 1 else "2b"
    if abs(beta - 1) <= tol:
        return "5"
    if beta > 1:
        return "3a" if beta < 1 + r else "3b"
    if beta > 1 - r * r:
        return "4a"
    return "4b-i" if beta < 1 - r else "4b-ii"


def count_trig_roots(p: ExtremalParams) -> int:
    """Predicted number of solutions in ``[-pi, pi)`` of

        cot(n t) + ((2-beta) r / (r^2+beta-1)) / sin(t)
                 + ((r^2-(beta-1)) / (r^2+beta-1)) cot(t) = 0.

    Every branch of ``cot(n t)`` strictly inside ``(0, pi)`` carries one
    root.  The outer half-branches ``(0, pi/2n)`` and ``((2n-1)pi/2n, pi)``
    carry one more root exactly when ``n`` does not exceed the matching
    threshold (equality counts as a root).  In case ``3b`` the near-``pi``
    threshold is the smaller of the two whenever ``beta < 2``, so the
    middle count ``2n - 2`` applies for ``T_pi < n <= T_0``.
    """
    n = p.n
    case = lemma_case(p)
    upper, lower = _thresholds(p.r, p.beta)
    # thresholds are rounded; n within 1e-12 of one counts as equal
    upper *= 1 + EQ_TOL
    lower *= 1 + EQ_TOL
    if case == "1":
        return 2 * n
    if case == "2a":
        return 2 * n - 2
    if case == "2b":
        return 2 * n - 2 if n > p.beta / (2 * (2 - p.beta)) * (1 + EQ_TOL) else 2 * n
    if case in ("3a", "4a", "5"):
        return 2 * (n - 1) + (2 if n <= upper else 0)
    if case in ("3b", "4b-i"):
        return 2 * (n - 2) + (2 if n <= upper else 0) + (2 if n <= lower else 0)
    return 2 * n - 2  # 4b-ii


# -- trigonometric branch -----------------------------------------------------


def _k_coeffs(r: float, beta: float) -> tuple[float, float]:
    e = r * r + beta - 1
    return (2 - beta) * r / e, 2 * (1 - beta) / e


def trig_residual(theta, p: ExtremalParams):
    """Left-hand side of the cotangent equation at ``theta``."""
    r, beta = p.r, p.beta
    e = r * r + beta - 1
    theta = np.asarray(theta, dtype=float)
    return (
        1 / np.tan(p.n * theta)
        + (2 - beta) * r / e / np.sin(theta)
        + (r * r - (beta - 1)) / e / np.tan(theta)
    )


def _trig_g(theta, n: int, a0: float, a1: float):
    """``sin((n+1)t) + K(cos t) sin(n t)``: the cotangent equation times
    ``sin(t) sin(n t)``, smooth on ``[0, pi]``."""
    return np.sin((n + 1) * theta) + (a0 + a1 * np.cos(theta)) * np.sin(n * theta)


def _cheb_poly_end(n: int, a0: float, a1: float, c: float) -> float:
    """``U_n(c) + K(c) U_(n-1)(c)`` at ``c = +-1``."""
    u_n = (n + 1) * (c**n)
    u_m = n * (c ** (n - 1))
    return u_n + (a0 + a1 * c) * u_m


def endpoint_ties(p: ExtremalParams) -> tuple[bool, bool]:
    """Whether ``c = 1`` (``theta = 0``) or ``c = -1`` (``theta = pi``) is itself a root.

    This happens exactly when ``n`` sits on a threshold of the root count.
    """
    n = p.n
    a0, a1 = _k_coeffs(p.r, p.beta)
    out = []
    for c in (1.0, -1.0):
        scale = (n + 1) + n * abs(a0 + a1 * c)
        out.append(abs(_cheb_poly_end(n, a0, a1, c)) <= TIE_RTOL * scale)
    return out[0], out[1]


TIE_RTOL = 1e-12


def _bisect(f, a: float, b: float, fa: float, tol: float = 0.0, maxiter: int = 400) -> float:
    """Bisection on a sign-changing bracket, run until the midpoint stops moving."""
    for _ in range(maxiter):
        m = 0.5 * (a + b)
        if m == a or m == b or abs(b - a) <= tol:
            return m
        fm = f(m)
        if fm == 0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def scan_trig_roots(p: ExtremalParams, grid: int | None = None) -> np.ndarray:
    """All solutions in ``(0, pi)`` of the cotangent equation.

    An endpoint ``0`` or ``pi`` is included when it is itself a root
    (see :func:`endpoint_ties`).  Each of the ``n`` branches between consecutive poles ``k pi / n`` is
    probed at ``max(32, grid // n)`` points; sign changes are refined by
    bisection to full double precision.  The endpoints use the limits of the
    equation multiplied by ``sin(t) sin(n t) / sin(t)``.
    """
    n, r, beta = p.n, p.r, p.beta
    if is_degenerate(p):
        raise DegenerateBeta(f"beta = {beta} is degenerate for r = {r}")
    if grid is None:
        grid = PROBES_PER_BRANCH * n
    if grid < 8 * n:
        raise GridTooCoarse(f"grid must be at least 8n = {8 * n}, got {grid}")
    per = max(PROBES_PER_BRANCH, grid // n)
    a0, a1 = _k_coeffs(r, beta)
    theta = np.linspace(0.0, np.pi, n * per + 1)
    # grid nodes k*per land on the poles k*pi/n, where g = +-sin(k pi / n) != 0
    vals = _trig_g(theta, n, a0, a1) / np.where(theta > 0, np.sin(theta), 1.0)
    vals[0] = _cheb_poly_end(n, a0, a1, 1.0)
    vals[-1] = _cheb_poly_end(n, a0, a1, -1.0)

    def g(t):
        return float(_trig_g(t, n, a0, a1))

    tie0, tie_pi = endpoint_ties(p)
    roots = [0.0] if tie0 else []
    # a tied endpoint takes the sign of its neighbour so it is not bracketed twice
    if tie0:
        vals[0] = vals[1]
    if tie_pi:
        vals[-1] = vals[-2]
    for k in range(len(theta) - 1):
        fa, fb = vals[k], vals[k + 1]
        if fa == 0 and 0 < k:
            roots.append(theta[k])
            continue
        if fa == 0 or fb == 0 or (fa > 0) == (fb > 0):
            continue
        roots.append(_bisect(g, theta[k], theta[k + 1], fa))
    if tie_pi:
        roots.append(np.pi)
    roots = np.array(roots)
    if roots.size > 1 and np.min(np.diff(roots)) <= 0:
        raise GridTooCoarse("adjacent brackets produced the same root")
    return roots


def lambda_sq_trig(theta, p: ExtremalParams):
    """``lam^2`` for a trigonometric-branch root.

    ``r^(2n-2) ((beta-1)^2 + r^2 - 2r(beta-1) cos t) / (1 + r^2 + 2r cos t)``,
    with numerator and denominator rewritten as sums of non-negative terms.
    """
    n, r, beta = p.n, p.r, p.beta
    theta = np.asarray(theta, dtype=float)
    b1 = beta - 1
    s2 = np.sin(theta / 2) ** 2
    c2 = np.cos(theta / 2) ** 2
    if b1 >= 0:
        num = (b1 - r) ** 2 + 4 * r * b1 * s2
    else:
        num = (b1 + r) ** 2 - 4 * r * b1 * c2
    den = (1 - r) ** 2 + 4 * r * c2
    return r ** (2 * n - 2) * num / den


# -- hyperbolic branches ------------------------------------------------------


def _tail_term(w, n: int, r: float, e: float):
    """``(E / r^2) w q^n (1-q) / (1-q^n)`` with ``q = r^2 / w^2``, for ``w > r``."""
    w = np.asarray(w, dtype=float)
    logq = 2 * (math.log(r) - np.log(w))
    qn = np.exp(n * logq)
    with np.errstate(invalid="ignore", divide="ignore"):
        ratio = np.expm1(logq) / np.expm1(n * logq)
    ratio = np.where(logq == 0, 1.0 / n, ratio)
    return (e / (r * r)) * w * qn * ratio


def _tail_term_at_r(n: int, r: float, e: float) -> float:
    return e / (r * n)


def _g_minus_u(u, n: int, r: float, beta: float, e: float):
    """``-cosh`` branch equation in ``u = w - 1``."""
    u = np.asarray(u, dtype=float)
    w = 1 + u
    return u * (u + beta) / w + _tail_term(w, n, r, e)


def _g_plus(w, n: int, r: float, beta: float, e: float):
    w = np.asarray(w, dtype=float)
    return (w + 1) * (w + 1 - beta) / w + _tail_term(w, n, r, e)


def _w_cap(r: float) -> float:
    # theta_max = max(5, ln(4/r)); beyond w = 4 the leading term dominates
    return max(4.0, r * math.exp(max(5.0, math.log(4 / r))))


def _probe_points(lo: float, hi: float, specials, m: int) -> np.ndarray:
    """Probe grid on ``(lo, hi]`` with geometric clusters around ``specials``."""
    pts = [np.linspace(lo, hi, m + 1)[1:]]
    span = hi - lo
    offs = span * np.logspace(-16, -1, 31)
    pts.append(lo + offs)
    for s in specials:
        if lo < s < hi:
            pts.append(np.array([s]))
            pts.append(s + offs[(s + offs) < hi])
            pts.append(s - offs[(s - offs) > lo])
    out = np.unique(np.concatenate(pts))
    return out[(out > lo) & (out <= hi)]


def _scan_branch(
    f, lo: float, f_lo: float, hi: float, specials, m: int, tie: bool = False
) -> list[float]:
    xs = _probe_points(lo, hi, specials, m)
    if tie:
        # the endpoint root belongs to the trigonometric branch; near it the
        # equation is pure rounding noise, so start the scan a little inside
        xs = xs[xs > lo + 1e-6 * (hi - lo)]
        f_lo = float(f(xs[0]))
    vals = np.asarray(f(xs), dtype=float)
    xs = np.concatenate([[lo], xs])
    vals = np.concatenate([[f_lo], vals])
    roots = []
    if vals[0] == 0 and not tie:
        roots.append(lo)
    for k in range(1, len(xs)):
        fa, fb = vals[k - 1], vals[k]
        if fb == 0:
            roots.append(xs[k])
            continue
        if fa == 0 or (fa > 0) == (fb > 0):
            continue
        roots.append(_bisect(lambda x: float(f(x)), xs[k - 1], xs[k], fa))
    return roots


@dataclass
class _HyperbolicRoots:
    plus_w: list[float]
    minus_u: list[float]


def _hyperbolic_roots(p: ExtremalParams, m: int, cap: float) -> _HyperbolicRoots:
    n, r, beta = p.n, p.r, p.beta
    e = _eq_excess(p)
    tie0, tie_pi = endpoint_ties(p)
    # +cosh branch, variable w on (r, cap]
    f_lo = (1 + r) * (1 + r - beta) / r + _tail_term_at_r(n, r, e)
    plus = _scan_branch(
        lambda w: _g_plus(w, n, r, beta, e), r, f_lo, cap, [beta - 1, 1.0], m, tie0
    )
    # -cosh branch, variable u = w - 1 on (r - 1, cap - 1]
    f_lo = (r - 1) * (r - 1 + beta) / r + _tail_term_at_r(n, r, e)
    minus = _scan_branch(
        lambda u: _g_minus_u(u, n, r, beta, e), r - 1, f_lo, cap - 1, [0.0, -beta], m, tie_pi
    )
    return _HyperbolicRoots(plus, minus)


def _lambda_sq_plus_w(w: float, p: ExtremalParams) -> float:
    n, r, beta = p.n, p.r, p.beta
    b1 = beta - 1
    num = (b1 - w) * (b1 - r * r / w)
    den = (1 + w) * (1 + r * r / w)
    return r ** (2 * n - 2) * num / den


def _lambda_sq_minus_u(u: float, p: ExtremalParams) -> float:
    n, r, beta = p.n, p.r, p.beta
    w = 1 + u
    b1 = beta - 1
    num = (w + b1) * (b1 + r * r / w)
    den = -u * (w - r * r) / w  # 1 + r^2 - 2 r cosh(theta)
    if den == 0:
        return math.inf
    return r ** (2 * n - 2) * num / den


def lambda_sq_cosh_plus(theta, p: ExtremalParams):
    """``lam^2`` on the ``+cosh`` branch:
    ``r^(2n-2) ((beta-1)^2 + r^2 - 2r(beta-1) cosh t) / (1 + r^2 + 2r cosh t)``."""
    n, r, beta = p.n, p.r, p.beta
    ch = np.cosh(np.asarray(theta, dtype=float))
    return r ** (2 * n - 2) * ((beta - 1) ** 2 + r * r - 2 * r * (beta - 1) * ch) / (
        1 + r * r + 2 * r * ch
    )


def lambda_sq_cosh_minus(theta, p: ExtremalParams):
    """``lam^2`` on the ``-cosh`` branch:
    ``r^(2n-2) ((beta-1)^2 + r^2 + 2r(beta-1) cosh t) / (1 + r^2 - 2r cosh t)``."""
    n, r, beta = p.n, p.r, p.beta
    ch = np.cosh(np.asarray(theta, dtype=float))
    return r ** (2 * n - 2) * ((beta - 1) ** 2 + r * r + 2 * r * (beta - 1) * ch) / (
        1 + r * r - 2 * r * ch
    )


def cosh_plus_residual(theta, p: ExtremalParams):
    """``sinh((n+1)t)/sinh(n t) + ((2-beta) r + 2(1-beta) cosh t) / (r^2+beta-1)``."""
    n, r, beta = p.n, p.r, p.beta
    theta = np.asarray(theta, dtype=float)
    s = np.sinh((n + 1) * theta) / np.sinh(n * theta)
    return s + ((2 - beta) * r + 2 * (1 - beta) * np.cosh(theta)) / _eq_excess(p)


def cosh_minus_residual(theta, p: ExtremalParams):
    """``sinh((n+1)t)/sinh(n t) - ((2-beta) r - 2(1-beta) cosh t) / (r^2+beta-1)``."""
    n, r, beta = p.n, p.r, p.beta
    theta = np.asarray(theta, dtype=float)
    s = np.sinh((n + 1) * theta) / np.sinh(n * theta)
    return s - ((2 - beta) * r - 2 * (1 - beta) * np.cosh(theta)) / _eq_excess(p)


def solve_cosh_branches(p: ExtremalParams) -> tuple[list[float], list[float]]:
    """Roots ``theta > 0`` of the ``+cosh`` and ``-cosh`` branch equations."""
    if is_degenerate(p):
        raise DegenerateBeta(f"beta = {p.beta} is degenerate for r = {p.r}")
    h = _hyperbolic_roots(p, 64 * p.n, _w_cap(p.r))
    r = p.r
    plus = [math.log(w / r) for w in h.plus_w]
    minus = [math.log1p(u) - math.log(r) for u in h.minus_u]
    return plus, minus


# -- assembly -----------------------------------------------------------------


def _degenerate_census(p: ExtremalParams) -> RootCensus:
    """Roots when ``c = gamma / 2 mu`` is the constant ``-(r + 1/r) / 2``.

    ``det`` then factors as ``mu^(n-1) (mu U_n(c) + (y - gamma) U_(n-1)(c))``:
    the ``mu = 0`` root ``r^(2n-2)(1-beta)`` with multiplicity ``n - 1`` and
    one root of a linear equation.
    """
    n, r, beta = p.n, p.r, p.beta
    # the linear root simplifies to (1 - beta)(r^(2n-2) + beta G / r^2) with
    # G = 1 + r^2 + ... + r^(2n-2); this form has no cancellation
    lq = 2 * math.log(r)
    geo = n if lq == 0 else math.expm1(n * lq) / math.expm1(lq)
    s = r ** (2 * n - 2)
    t0 = s * (1 - beta)
    t1 = (1 - beta) * (s + beta * geo / (r * r))
    census = RootCensus(predicted_count=None, degenerate_mu=n - 1)
    census.lambda_squares = [t0] * (n - 1) + [t1]
    return census


def root_census(p: ExtremalParams) -> RootCensus:
    """Solve every branch and collect the ``n`` values of ``lam^2``.

    Raises :class:`NoRootFound` when the branches do not account for ``n``
    roots even after refining the hyperbolic probe grid.
    """
    if is_degenerate(p):
        return _degenerate_census(p)
    n = p.n
    if n == 1:
        # X is the 1 x 1 matrix [1]
        return RootCensus(predicted_count=None, lambda_squares=[1.0], lemma_case=lemma_case(p))
    census = RootCensus(predicted_count=count_trig_roots(p), lemma_case=lemma_case(p))
    trig = scan_trig_roots(p)
    census.found_trig = list(trig)
    lam_sq = list(lambda_sq_trig(trig, p)) if trig.size else []
    m, cap = 64 * n, _w_cap(p.r)
    for _ in range(4):
        h = _hyperbolic_roots(p, m, cap)
        if len(trig) + len(h.plus_w) + len(h.minus_u) >= n:
            break
        m, cap = 4 * m, 2 * cap
    total = len(trig) + len(h.plus_w) + len(h.minus_u)
    if total != n:
        raise NoRootFound(
            f"branches gave {total} roots for n={n} (r={p.r}, beta={p.beta})"
        )
    r = p.r
    census.found_cosh_plus = [math.log(w / r) for w in h.plus_w]
    census.found_cosh_minus = [math.log1p(u) - math.log(r) for u in h.minus_u]
    lam_sq += [_lambda_sq_plus_w(w, p) for w in h.plus_w]
    lam_sq += [_lambda_sq_minus_u(u, p) for u in h.minus_u]
    census.lambda_squares = [float(t) for t in lam_sq]
    census.minus_u = list(h.minus_u)
    return census


@dataclass
class CharEqResult:
    norm: float
    census: RootCensus | None
    method: str  # "char_eq", "degenerate" or "oracle_fallback"


def solve_char_eq(p: ExtremalParams) -> CharEqResult:
    """Norm of ``X_{r, beta}`` with provenance.

    Inside the band ``|beta - (1 - r^2)| < 1e-3`` (but off the exact
    degenerate point) the branch coefficients blow up, so the dense
    eigensolver is used and ``method`` says so.
    """
    if is_degenerate(p):
        census = _degenerate_census(p)
        return CharEqResult(math.sqrt(max(census.lambda_squares)), census, "degenerate")
    if abs(_eq_excess(p)) < NEAR_DEGENERATE_BAND:
        return CharEqResult(xnorm_oracle(p), None, "oracle_fallback")
    census = root_census(p)
    t = max(census.lambda_squares)
    if not (t >= 0 and math.isfinite(t)):
        raise NoRootFound(f"largest root lam^2 = {t} is not a finite square")
    return CharEqResult(math.sqrt(t), census, "char_eq")


def xnorm_char_eq(p: ExtremalParams) -> float:
    """``||X_{r, beta}||`` as ``|lam*|``, the largest root of the characteristic equation."""
    return solve_char_eq(p).norm


def char_eq_relative_residual(p: ExtremalParams, lam_sq: float) -> float:
    """Residual of the characteristic polynomial at ``t``, relative to its two terms."""
    from .toeplitz import chebyshev_u, tridiagonal_entries

    n, r, beta = p.n, p.r, p.beta
    lam = math.sqrt(lam_sq)
    e = tridiagonal_entries(p, lam)
    mu, gamma = e["mu"], e["gamma"]
    c = gamma / (2 * mu)
    a = r * mu ** (n + 1) * float(chebyshev_u(n, c))
    b = mu**n * (lam_sq - r ** (2 * n - 2) * (beta - 1) ** 2) * float(chebyshev_u(n - 1, c))
    scale = abs(a) + abs(b)
    return 0.0 if scale == 0 else abs(char_polynomial(p, lam)) / scale


def xnorm_limit_gap(p: ExtremalParams) -> float:
    """``beta / (1 - r^2) - ||X_{r, beta}||`` without cancellation.

    When the largest root comes from the ``-cosh`` branch the gap is
    assembled from ``u = w - 1`` and ``q^n`` directly; otherwise the plain
    difference is returned.
    """
    r, beta, n = p.r, p.beta, p.n
    if not (0 < r < 1) or beta < 1 - r * r:
        raise ValueError("the limit applies for r in (0, 1) and beta >= 1 - r^2")
    limit = beta / (1 - r * r)
    if is_degenerate(p) or abs(_eq_excess(p)) < NEAR_DEGENERATE_BAND:
        return limit - solve_char_eq(p).norm
    census = root_census(p)
    lam_sq = census.lambda_squares
    top = int(np.argmax(lam_sq))
    n_trig_plus = len(census.found_trig) + len(census.found_cosh_plus)
    if top < n_trig_plus or n == 1:
        return limit - math.sqrt(lam_sq[top])
    u = census.minus_u[top - n_trig_plus]
    e = _eq_excess(p)
    w = 1 + u
    one_m_r2 = 1 - r * r
    logq = 2 * (math.log(r) - math.log1p(u))
    delta = (
        (2 * n - 2) * math.log1p(u)
        + 2 * math.log1p(u / beta)
        + math.log1p(u * (beta - 1) / e)
        - math.log1p(u / one_m_r2)
        + math.log1p(-math.exp(n * logq))
        - math.log1p(r * r * u * (2 + u) / (w * w * one_m_r2))
    )
    return -limit * math.expm1(delta / 2)


def threshold_pair(p: ExtremalParams) -> tuple[float, float]:
    """``(T_pi, T_0)``: thresholds for the extra root near ``pi`` and near ``0``.

    For ``1 + r < beta < 2`` one has ``T_pi < T_0``, since the two
    denominators differ by ``2 r (2 - beta)``.
    """
    return _thresholds(p.r, p.beta)


# (r, beta, n) triples covering each case of the root count, with n on both
# sides of every finite threshold
LEMMA_CASE_GRID: dict[str, list[tuple[float, float, int]]] = {
    "1": [(1.0, 0.5, 1), (1.0, 0.5, 4), (1.0, 1.5, 3), (1.0, 1.9, 7)],
    "2a": [(0.4, 0.6, 2), (0.4, 0.6, 5), (0.7, 0.3, 3)],
    "2b": [(0.8, 1.8, 4), (0.8, 1.8, 5), (0.5, 1.5, 1), (0.5, 1.5, 2)],
    "3a": [(0.5, 1.2, 1), (0.5, 1.2, 2), (0.9, 1.5, 9), (0.9, 1.5, 10)],
    "3b": [(0.5, 1.55, 1), (0.5, 1.55, 2), (0.5, 1.55, 10), (0.5, 1.55, 11), (0.3, 1.8, 1), (0.3, 1.8, 2)],
    "4a": [(0.9, 0.5, 7), (0.9, 0.5, 8), (0.5, 0.9, 1), (0.5, 0.9, 3)],
    "4b-i": [(0.3, 0.5, 2), (0.3, 0.5, 3), (0.6, 0.3, 8), (0.6, 0.3, 9)],
    "4b-ii": [(0.5, 0.6, 3), (0.8, 0.3, 6)],
    "5": [(0.8, 1.0, 4), (0.8, 1.0, 5), (0.75, 1.0, 3), (0.75, 1.0, 4), (0.4, 1.0, 1)],
}


def lemma_case_grid() -> list[tuple[str, ExtremalParams]]:
    return [
        (case, ExtremalParams(n, r, beta))
        for case, rows in LEMMA_CASE_GRID.items()
        for r, beta, n in rows
    ]
