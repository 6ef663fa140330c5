"""Barnes double gamma function log Gamma_b(x) for b > 0.

For 0 < Re x the function has the integral representation

    log Gamma_b(x) = int_0^inf dt/t [ (e^{-x t} - e^{-Q t/2})
                                      / ((1 - e^{-t b})(1 - e^{-t/b}))
                                      - (Q/2 - x)^2 / (2 e^t) - (Q/2 - x)/t ]

with Q = b + 1/b.  The integrand has a removable singularity at t = 0 that
is numerically delicate, so the evaluation is split:

  * [0, t0]    -- exact power-series integration (the 1/t and 1/t^2 parts of
                  the bracket cancel analytically against the subtractions),
  * [t0, T]    -- composite Gauss-Legendre panels on the exponentially
                  decaying piece, panel width adapted to the e^{-i Im(x) t}
                  oscillation,
  * [t0, inf)  -- the two subtraction terms integrated in closed form
                  (exponential integral and a 1/t^2 tail).

Arguments outside the window Q/2 <= Re x < Q/2 + max(b, 1/b) are first
reduced into it with the shift relations

    Gamma_b(x + b)   = sqrt(2 pi) b^{b x - 1/2}  / Gamma(b x)  * Gamma_b(x)
    Gamma_b(x + 1/b) = sqrt(2 pi) b^{-x/b + 1/2} / Gamma(x/b) * Gamma_b(x)

accumulating log factors exactly (scipy's loggamma branch), capped at 64
steps.  The returned branch of log Gamma_b is therefore continuous along the
shift path, starting from the principal determination in the window.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import exp1, loggamma

from ..errors import PoleError, QuadratureError
from ..params import ModularParam

_GL_ORDER = 24
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(_GL_ORDER)

_T0 = 0.05           # series/quadrature split point
_SERIES_ORDER = 20   # kept powers of t in the small-t series
_TAIL_DECADES = 40.0 # integrate until e^{-a t} ~ e^{-40}
_MAX_SHIFTS = 64

POLE_TOL = 1e-9

_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def pole_lattice_distance(x: complex, p: ModularParam, max_index: int = 80) -> float:
    """Distance from x to the Gamma_b pole lattice {-n b - m / b : n, m >= 0}."""
    x = complex(x)
    if x.real > POLE_TOL:
        # lattice is on the non-positive real axis
        return abs(x)
    best = abs(x)
    nmax = min(max_index, int(abs(x.real) / p.b) + 2)
    for n in range(nmax + 1):
        r = x.real + n * p.b
        # nearest m for this n
        m = max(0, round(-r * p.b))
        for mm in (m - 1, m, m + 1):
            if mm < 0:
                continue
            d = abs(x - (-n * p.b - mm / p.b))
            if d < best:
                best = d
    return best


def _shift_log_factor(y: complex, b: float, step_is_b: bool) -> complex:
    """log[ Gamma_b(y + s) / Gamma_b(y) ] for s = b or s = 1/b."""
    if step_is_b:
        arg = b * y
        expo = (b * y - 0.5) * math.log(b)
    else:
        arg = y / b
        expo = (-y / b + 0.5) * math.log(b)
    if abs(arg - round(arg.real)) < POLE_TOL and arg.real <= 0.5:
        raise PoleError(f"shift factor hits an ordinary Gamma pole at {arg}")
    return _LOG_SQRT_2PI + expo - loggamma(arg)


def _series_coefficients(x: complex, p: ModularParam, order: int) -> np.ndarray:
    """Ascending power-series coefficients h_k of N(t)/(t^2 G(t)) * t.

    N(t) = e^{-x t} - e^{-Q t / 2}, D(t) = t^2 G(t); returns h with
    N/D = (1/t) * sum_k h[k] t^k.
    """
    b, Q = p.b, p.Q
    k = np.arange(1, order + 2)
    fact = np.cumprod(np.concatenate(([1.0], k.astype(float))))  # 0!..(order+1)!
    n_coeff = ((-x) ** k - (-Q / 2.0) ** k) / fact[1:]

    # g(u) = (1 - e^{-u})/u = sum_j (-1)^j u^j / (j+1)!
    j = np.arange(0, order + 1)
    g_b = (-1.0) ** j * (b ** j) / fact[1:order + 2]
    g_ib = (-1.0) ** j * ((1.0 / b) ** j) / fact[1:order + 2]
    G = np.convolve(g_b, g_ib)[: order + 1]

    # h = (N/t) / G by series division
    num = n_coeff[: order + 1].astype(complex)
    h = np.zeros(order + 1, dtype=complex)
    h[0] = num[0] / G[0]
    for n in range(1, order + 1):
        h[n] = (num[n] - np.dot(G[1 : n + 1], h[n - 1 :: -1][: n])) / G[0]
    return h


def _small_t_integral(x: complex, p: ModularParam, t0: float) -> complex:
    """Integral over [0, t0] of the full (subtracted) integrand."""
    Q = p.Q
    h = _series_coefficients(x, p, _SERIES_ORDER)
    kk = np.arange(2, _SERIES_ORDER + 1)
    part1 = np.dot(h[2:], t0 ** (kk - 1) / (kk - 1))
    jj = np.arange(1, _SERIES_ORDER + 1)
    factj = np.cumprod(jj.astype(float))
    part2 = np.dot((-1.0) ** jj / (jj * factj), t0 ** jj)
    return part1 - (Q / 2.0 - x) ** 2 / 2.0 * part2


def _panel_integral(x: complex, p: ModularParam, t0: float) -> complex:
    """Gauss-Legendre panels of M(t) = (e^{-x t} - e^{-Q t/2}) / (D(t) t) on [t0, T]."""
    b, Q = p.b, p.Q
    a = min(x.real, Q / 2.0)
    if a <= 0:
        raise QuadratureError("integrand does not decay: Re x <= 0 after reduction")
    T = t0 + _TAIL_DECADES / a
    # geometric refinement on [t0, 1] resolves the ~1/t^2 left end, uniform
    # panels (width capped by the e^{-i Im(x) t} oscillation) beyond
    width = min(2.0, 6.0 * math.pi / max(abs(x.imag), 1.0))
    geo = [t0]
    while geo[-1] < min(1.0, T):
        geo.append(geo[-1] * 1.7)
    geo[-1] = min(1.0, T)
    uni = []
    if T > 1.0:
        n_uni = max(4, int(math.ceil((T - 1.0) / width)))
        uni = list(np.linspace(1.0, T, n_uni + 1)[1:])
    edges = np.array(geo + uni)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    t = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    den = (1.0 - np.exp(-b * t)) * (1.0 - np.exp(-t / b)) * t
    val = (np.exp(-x * t) - np.exp(-Q * t / 2.0)) / den
    return complex(np.dot(w, val))


def _core_log_gamma_b(x: complex, p: ModularParam) -> complex:
    """log Gamma_b(x) for x inside the evaluation window (no shifts)."""
    Q = p.Q
    t0 = _T0
    small = _small_t_integral(x, p, t0)
    main = _panel_integral(x, p, t0)
    c = Q / 2.0 - x
    tail_exp = -(c**2) / 2.0 * exp1(t0)
    tail_inv = -c / t0
    return small + main + tail_exp + tail_inv


def log_gamma_b(x: complex, p: ModularParam, precision: str = "double") -> complex:
    """log Gamma_b(x), branch continuous along the shift path.

    Raises PoleError within POLE_TOL of the pole lattice and QuadratureError
    if the shift reduction or integration cannot be completed.
    """
    x = complex(x)
    if not (math.isfinite(x.real) and math.isfinite(x.imag)):
        raise QuadratureError(f"non-finite argument {x}")
    if pole_lattice_distance(x, p) < POLE_TOL:
        raise PoleError(f"Gamma_b pole at x = {x}")
    if precision == "extended":
        return _log_gamma_b_mp(x, p)

    b, Q = p.b, p.Q
    step_is_b = b >= 1.0
    step = b if step_is_b else 1.0 / b
    lo = Q / 2.0

    acc = 0.0 + 0.0j
    y = x
    nshift = 0
    while y.real < lo - 1e-15:
        acc -= _shift_log_factor(y, b, step_is_b)
        y += step
        nshift += 1
        if nshift > _MAX_SHIFTS:
            raise QuadratureError(f"shift cap exceeded reducing x = {x}")
    while y.real >= lo + step:
        y -= step
        acc += _shift_log_factor(y, b, step_is_b)
        nshift += 1
        if nshift > _MAX_SHIFTS:
            raise QuadratureError(f"shift cap exceeded reducing x = {x}")
    return _core_log_gamma_b(y, p) + acc


def _log_gamma_b_mp(x: complex, p: ModularParam, dps: int = 32) -> complex:
    """Extended-precision rerun (mpmath backend) behind the precision flag."""
    import mpmath as mp

    b, Q = p.b, p.Q
    with mp.workdps(dps):
        xm = mp.mpc(x)
        # reduce like the double path so the integrand decays
        step = b if b >= 1.0 else 1.0 / b
        lo = Q / 2.0
        acc = mp.mpc(0)
        y = xm
        guard = 0
        while mp.re(y) < lo:
            if b >= 1.0:
                fac = 0.5 * mp.log(2 * mp.pi) + (b * y - 0.5) * mp.log(b) - mp.loggamma(b * y)
            else:
                fac = 0.5 * mp.log(2 * mp.pi) + (-y / b + 0.5) * mp.log(b) - mp.loggamma(y / b)
            acc -= fac
            y += step
            guard += 1
            if guard > _MAX_SHIFTS:
                raise QuadratureError("shift cap exceeded (extended precision)")
        while mp.re(y) >= lo + step:
            y -= step
            if b >= 1.0:
                fac = 0.5 * mp.log(2 * mp.pi) + (b * y - 0.5) * mp.log(b) - mp.loggamma(b * y)
            else:
                fac = 0.5 * mp.log(2 * mp.pi) + (-y / b + 0.5) * mp.log(b) - mp.loggamma(y / b)
            acc += fac
            guard += 1
            if guard > _MAX_SHIFTS:
                raise QuadratureError("shift cap exceeded (extended precision)")

        c = Q / 2 - y

        def bracket(t):
            t = mp.mpf(t)
            num = mp.exp(-y * t) - mp.exp(-Q * t / 2)
            den = (1 - mp.exp(-b * t)) * (1 - mp.exp(-t / b))
            return (num / den - c**2 / (2 * mp.exp(t)) - c / t) / t

        a = min(float(mp.re(y)), Q / 2.0)
        T = 8.0 + 45.0 / a
        # naive evaluation below 1e-5 cancels; the series region is tiny at
        # this precision so shift the lower endpoint instead
        t_lo = mp.mpf("1e-6")
        core = mp.quad(bracket, [t_lo, 0.1, 1, 5, T])
        # [0, t_lo] contributes ~ bracket(0) * t_lo; bracket(0) is O(1)
        core += bracket(t_lo) * t_lo
        return complex(core + acc)
