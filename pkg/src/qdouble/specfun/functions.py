"""Scalar special functions built on log Gamma_b.

The definitional chain:

    Upsilon_b(x) = 1 / (Gamma_b(x) Gamma_b(Q-x))
    S_b(x)       = Gamma_b(x) / Gamma_b(Q-x)
    G_b(x)       = exp(-i pi x (Q-x) / 2) S_b(x)
    w_b(x)       = exp(+i pi (Q^2/4 + x^2) / 2) G_b(Q/2 - i x)
    e_b(x)       = zeta_b / G_b(Q/2 - i x)
    g_b(u)       = e_b(log(u) / (2 pi b))        (principal branch)

and the supersymmetric pair

    Gamma_NS(x) = Gamma_b(x/2) Gamma_b((x+Q)/2)
    Gamma_R(x)  = Gamma_b((x+b)/2) Gamma_b((x+1/b)/2)
    G_NS(x) = zeta_0 exp(-i pi x(Q-x)/4) S_NS(x),   S_NS = Gamma_NS(x)/Gamma_NS(Q-x)
    G_R(x)  = exp(-i pi/4) zeta_0 exp(-i pi x(Q-x)/4) S_R(x)
    e_R(x)  = e_b(x/2 + i(b - 1/b)/4) e_b(x/2 - i(b - 1/b)/4)
    e_NS(x) = e_b(x/2 + i(b + 1/b)/4) e_b(x/2 - i(b + 1/b)/4)
    g_R(u)  = e_R(log(u) / (pi b)),  g_NS likewise
    f_pm = e_R +- e_NS,   h_pm = 1/e_R +- 1/e_NS

S_b as a Gamma_b quotient satisfies S_b(x) S_b(Q-x) = 1; the properties
stated for the unit-circle double sine (the 2cosh shift, the inversion at
-x, the residue at iQ/2) live in the rotated convention, exposed here as
``sb_rotated``.  Each identity suite runs in the convention where it holds.

eval() raises PoleError when the argument is within POLE_TOL of the
pole *or* zero lattice of the requested function (evaluating exp(log ...)
exactly on a zero is as ill-defined as on a pole).
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

from ..errors import DomainError, PoleError
from ..params import ModularParam
from .gamma_b import POLE_TOL, log_gamma_b


class FunctionId(str, Enum):
    GAMMA_B = "gamma_b"
    SB = "sb"
    GB = "gb"
    UPSILON_B = "upsilon_b"
    WB = "wb"
    EB = "eb"
    GB_SMALL = "gb_small"
    GNS = "gns"
    GR = "gr"
    ENS = "ens"
    ER = "er"
    GNS_SMALL = "gns_small"
    GR_SMALL = "gr_small"
    F_PLUS = "f_plus"
    F_MINUS = "f_minus"
    H_PLUS = "h_plus"
    H_MINUS = "h_minus"


def lattice_distance(y: complex, p: ModularParam, parity: int | None = None,
                     max_total: int = 24) -> float:
    """Distance from y to {n b + m / b : n, m >= 0 [, n + m of given parity]}."""
    y = complex(y)
    best = float("inf")
    nmax = min(max_total, int(max(0.0, y.real) / p.b) + 2)
    for n in range(nmax + 1):
        r = y.real - n * p.b
        m0 = max(0, round(r * p.b))
        for m in (m0 - 1, m0, m0 + 1):
            if m < 0:
                continue
            if parity is not None and (n + m) % 2 != parity:
                continue
            d = abs(y - (n * p.b + m / p.b))
            best = min(best, d)
    if parity in (None, 0):
        best = min(best, abs(y))  # n = m = 0 point
    return best


def _bad_lattice_distance(fn: FunctionId, x: complex, p: ModularParam) -> float:
    """Distance to the union of the pole and zero lattices of fn."""
    x = complex(x)
    Q = p.Q
    if fn in (FunctionId.GAMMA_B,):
        return lattice_distance(-x, p)
    if fn in (FunctionId.SB, FunctionId.GB, FunctionId.UPSILON_B):
        return min(lattice_distance(-x, p), lattice_distance(x - Q, p))
    if fn is FunctionId.WB:
        y = Q / 2 - 1j * x
        return min(lattice_distance(-y, p), lattice_distance(y - Q, p))
    if fn is FunctionId.EB:
        y = Q / 2 - 1j * x
        return min(lattice_distance(-y, p), lattice_distance(y - Q, p))
    if fn is FunctionId.GNS:
        return min(lattice_distance(-x, p, parity=0), lattice_distance(x - Q, p, parity=0))
    if fn is FunctionId.GR:
        return min(lattice_distance(-x, p, parity=1), lattice_distance(x - Q, p, parity=1))
    if fn is FunctionId.ENS:
        y = Q / 2 - 1j * x
        return min(lattice_distance(-y, p, parity=0), lattice_distance(y - Q, p, parity=0))
    if fn is FunctionId.ER:
        y = Q / 2 - 1j * x
        return min(lattice_distance(-y, p, parity=1), lattice_distance(y - Q, p, parity=1))
    if fn in (FunctionId.F_PLUS, FunctionId.F_MINUS, FunctionId.H_PLUS, FunctionId.H_MINUS):
        return min(_bad_lattice_distance(FunctionId.ENS, x, p),
                   _bad_lattice_distance(FunctionId.ER, x, p))
    return float("inf")


def _gamma(x, p, precision):
    return cmath.exp(log_gamma_b(x, p, precision))


def _sb(x, p, precision):
    return cmath.exp(log_gamma_b(x, p, precision) - log_gamma_b(p.Q - x, p, precision))


def _gb(x, p, precision):
    return cmath.exp(-0.5j * math.pi * x * (p.Q - x)) * _sb(x, p, precision)


def _eb(x, p, precision):
    return p.zeta_b / _gb(p.Q / 2 - 1j * x, p, precision)


def _sns(x, p, precision):
    Q = p.Q
    lg = lambda z: log_gamma_b(z, p, precision)
    return cmath.exp(lg(x / 2) + lg((x + Q) / 2) - lg((Q - x) / 2) - lg(Q - x / 2))


def _sr(x, p, precision):
    Q, b = p.Q, p.b
    lg = lambda z: log_gamma_b(z, p, precision)
    return cmath.exp(lg((x + b) / 2) + lg((x + 1 / b) / 2)
                     - lg((Q - x + b) / 2) - lg((Q - x + 1 / b) / 2))


def _gns(x, p, precision):
    return p.zeta_0 * cmath.exp(-0.25j * math.pi * x * (p.Q - x)) * _sns(x, p, precision)


def _gr(x, p, precision):
    return cmath.exp(-0.25j * math.pi) * p.zeta_0 \
        * cmath.exp(-0.25j * math.pi * x * (p.Q - x)) * _sr(x, p, precision)


def _er(x, p, precision):
    c = 0.25j * (p.b - 1.0 / p.b)
    return _eb(x / 2 + c, p, precision) * _eb(x / 2 - c, p, precision)


def _ens(x, p, precision):
    c = 0.25j * (p.b + 1.0 / p.b)
    return _eb(x / 2 + c, p, precision) * _eb(x / 2 - c, p, precision)


def _principal_log_arg(u: complex, scale: float) -> complex:
    u = complex(u)
    if u.real <= 0.0 and abs(u.imag) < POLE_TOL:
        raise DomainError(f"argument {u} on the branch cut (closed negative reals)")
    return cmath.log(u) / scale


def eval(fn: FunctionId, x: complex, p: ModularParam, precision: str = "double") -> complex:
    """Evaluate the special function fn at x through the definitional chain."""
    fn = FunctionId(fn)
    x = complex(x)
    if fn is FunctionId.GB_SMALL:
        z = _principal_log_arg(x, 2.0 * math.pi * p.b)
        return eval(FunctionId.EB, z, p, precision)
    if fn is FunctionId.GNS_SMALL:
        z = _principal_log_arg(x, math.pi * p.b)
        return eval(FunctionId.ENS, z, p, precision)
    if fn is FunctionId.GR_SMALL:
        z = _principal_log_arg(x, math.pi * p.b)
        return eval(FunctionId.ER, z, p, precision)

    if _bad_lattice_distance(fn, x, p) < POLE_TOL:
        raise PoleError(f"{fn.value} pole/zero lattice at x = {x}")

    if fn is FunctionId.GAMMA_B:
        return _gamma(x, p, precision)
    if fn is FunctionId.SB:
        return _sb(x, p, precision)
    if fn is FunctionId.GB:
        return _gb(x, p, precision)
    if fn is FunctionId.UPSILON_B:
        return cmath.exp(-log_gamma_b(x, p, precision) - log_gamma_b(p.Q - x, p, precision))
    if fn is FunctionId.WB:
        return cmath.exp(0.5j * math.pi * (p.Q**2 / 4 + x**2)) * _gb(p.Q / 2 - 1j * x, p, precision)
    if fn is FunctionId.EB:
        return _eb(x, p, precision)
    if fn is FunctionId.GNS:
        return _gns(x, p, precision)
    if fn is FunctionId.GR:
        return _gr(x, p, precision)
    if fn is FunctionId.ENS:
        return _ens(x, p, precision)
    if fn is FunctionId.ER:
        return _er(x, p, precision)
    if fn is FunctionId.F_PLUS:
        return _er(x, p, precision) + _ens(x, p, precision)
    if fn is FunctionId.F_MINUS:
        return _er(x, p, precision) - _ens(x, p, precision)
    if fn is FunctionId.H_PLUS:
        return 1.0 / _er(x, p, precision) + 1.0 / _ens(x, p, precision)
    if fn is FunctionId.H_MINUS:
        return 1.0 / _er(x, p, precision) - 1.0 / _ens(x, p, precision)
    raise ValueError(f"unhandled function id {fn}")


def sb_rotated(z: complex, p: ModularParam, precision: str = "double") -> complex:
    """Unit-circle double sine s(z) = S_b(Q/2 + i z).

    This is the convention in which the 2cosh functional equation
    s(z - ib/2) = 2 cosh(pi b z) s(z + ib/2) and the inversion
    s(z) s(-z) = 1 hold.
    """
    return _sb(p.Q / 2 + 1j * complex(z), p, precision)


def ens_from_g(x: complex, p: ModularParam, precision: str = "double") -> complex:
    """e_NS via the zeta_b^2 / G_NS(Q/2 - i x) route (cross-check path)."""
    return p.zeta_b**2 / _gns(p.Q / 2 - 1j * complex(x), p, precision)


def er_from_g(x: complex, p: ModularParam, precision: str = "double") -> complex:
    """e_R via the zeta_b^2 / G_R(Q/2 - i x) route (cross-check path)."""
    return p.zeta_b**2 / _gr(p.Q / 2 - 1j * complex(x), p, precision)
