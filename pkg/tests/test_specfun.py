"""Special-function layer: definitional chain, identities, lattices, oracles."""

import cmath
import math

import numpy as np
import pytest

from qdouble.errors import DomainError, PoleError
from qdouble.params import ModularParam, DEFAULT_B_VALUES
from qdouble.specfun import checks as ck
from qdouble.specfun import fastdilog as fd
from qdouble.specfun.functions import (FunctionId as FI, ens_from_g, er_from_g,
                                       eval as fev, sb_rotated)
from qdouble.specfun.gamma_b import log_gamma_b


def trapezoid_log_gamma_b(x, b, nodes=1_000_000, T=60.0):
    """Independent trapezoid-rule oracle for the defining integral.

    The 1/t^2 piece of the integrand is integrated analytically beyond T
    (-c/T tail); the remaining terms are below 1e-20 there.
    """
    x = complex(x)
    Q = b + 1.0 / b
    c = Q / 2 - x
    t = np.linspace(0.0, T, nodes)
    tx = t.copy()
    tx[0] = 1.0  # dummy; endpoint replaced by the analytic limit below
    num = np.exp(-x * tx) - np.exp(-Q * tx / 2)
    den = (1 - np.exp(-b * tx)) * (1 - np.exp(-tx / b))
    f = (num / den - c**2 / (2 * np.exp(tx)) - c / tx) / tx
    # limit of the integrand at t = 0
    g2 = (b * b + 1 / (b * b)) / 6.0 + 0.25
    n1, n2, n3 = Q / 2 - x, (x**2 - Q**2 / 4) / 2, (Q**3 / 8 - x**3) / 6
    f[0] = (n3 + n2 * Q / 2 + n1 * (Q**2 / 4 - g2)) + c**2 / 2.0
    return np.trapezoid(f, t) - c / T


class TestGammaB:
    def test_quadrature_oracle_at_half_Q(self):
        # x = Q/2, b = 1: integrand vanishes identically, both paths give 0
        p = ModularParam(1.0)
        mine = log_gamma_b(p.Q / 2, p)
        oracle = trapezoid_log_gamma_b(p.Q / 2, 1.0)
        assert abs(cmath.exp(mine) - cmath.exp(oracle)) < 1e-10

    @pytest.mark.parametrize("x,b", [(0.45, 1.0), (1.3, 0.8), (0.7 + 0.4j, 0.9)])
    def test_quadrature_oracle_generic(self, x, b):
        p = ModularParam(b)
        mine = log_gamma_b(x, p)
        # one Richardson step removes the h^2 trapezoid error
        t1 = trapezoid_log_gamma_b(x, b, nodes=500_001)
        t2 = trapezoid_log_gamma_b(x, b, nodes=1_000_001)
        oracle = (4 * t2 - t1) / 3
        assert abs(mine - oracle) / max(abs(mine), 1.0) < 1e-10

    def test_shift_ratio_b1(self):
        # Gamma_b(x+b)/Gamma_b(x) at b=1, x=0.5 -> sqrt(2 pi)/Gamma(0.5) = sqrt(2)
        p = ModularParam(1.0)
        ratio = cmath.exp(log_gamma_b(1.5, p) - log_gamma_b(0.5, p))
        assert abs(ratio - math.sqrt(2.0)) < 1e-12

    def test_residue_at_zero(self):
        # x Gamma_b(x) -> Gamma_b(Q)/(2 pi) as x -> 0
        p = ModularParam(0.8)
        target = cmath.exp(log_gamma_b(p.Q + 0j, p)) / (2 * math.pi)
        for eps in (1e-4, 1e-5):
            val = eps * cmath.exp(log_gamma_b(eps + 0j, p))
            assert abs(val - target) / abs(target) < 1e-3 * eps / 1e-5 + 1e-6

    def test_pole_error_on_lattice(self):
        p = ModularParam(0.8)
        for n, m in [(0, 0), (1, 0), (0, 2), (2, 3)]:
            with pytest.raises(PoleError):
                log_gamma_b(-n * p.b - m / p.b + 0j, p)

    def test_self_duality_direct(self):
        for b in (0.62, 0.9):
            d = abs(log_gamma_b(1.1 - 0.7j, ModularParam(b))
                    - log_gamma_b(1.1 - 0.7j, ModularParam(1 / b)))
            assert d < 1e-12

    def test_extended_precision_agrees(self):
        p = ModularParam(0.8)
        a = log_gamma_b(0.6 + 0.3j, p)
        bb = log_gamma_b(0.6 + 0.3j, p, precision="extended")
        assert abs(a - bb) < 1e-11


class TestClosedFormSpots:
    def test_sb_at_center(self):
        for b in DEFAULT_B_VALUES:
            p = ModularParam(b)
            assert abs(fev(FI.SB, p.Q / 2, p) - 1.0) < 1e-12

    def test_gb_at_center_b1(self):
        p = ModularParam(1.0)
        assert abs(fev(FI.GB, p.Q / 2, p) - (-1j)) < 1e-12

    def test_eb_at_zero_b1(self):
        p = ModularParam(1.0)
        assert abs(fev(FI.EB, 0.0, p) - cmath.exp(1j * math.pi / 12)) < 1e-12

    def test_gb_shift_ratio_b1(self):
        p = ModularParam(1.0)
        assert abs(fev(FI.GB, 1.5, p) / fev(FI.GB, 0.5, p) - 2.0) < 1e-12

    def test_ens_reflection_at_zero(self):
        for b in (0.8, 1.23):
            p = ModularParam(b)
            lhs = fev(FI.ENS, 0.0, p) ** 2
            rhs = cmath.exp(-1j * math.pi * p.Q**2 / 8) \
                * cmath.exp(-1j * math.pi * (1 - p.Q**2 / 2) / 3)
            assert abs(lhs - rhs) < 1e-12


class TestIdentitySweep:
    @pytest.fixture(scope="class")
    def samples(self):
        rng = np.random.default_rng(20240811)
        out = {}
        for b in DEFAULT_B_VALUES:
            p = ModularParam(b)
            out[b] = rng.uniform(0.1, p.Q - 0.1, 15) + 1j * rng.uniform(-2, 2, 15)
        return out

    def test_shift_reflection_selfduality(self, samples):
        shift_fns = (FI.GAMMA_B, FI.SB, FI.GB, FI.EB, FI.GNS, FI.GR, FI.ENS, FI.ER)
        refl_fns = (FI.SB, FI.GB, FI.EB, FI.GNS, FI.GR, FI.ENS, FI.ER)
        for b, xs in samples.items():
            p = ModularParam(b)
            for x in xs:
                for fn in shift_fns:
                    assert ck.check_shift(fn, complex(x), p) < 1e-8, (fn, x, b)
                for fn in refl_fns:
                    assert ck.check_reflection(fn, complex(x), p) < 1e-8, (fn, x, b)
                assert ck.check_self_duality(complex(x), b) < 1e-8

    def test_crossed_shift_ens_to_er(self, samples):
        # e_NS(x - ib/2) = (1 - i e^{pi b x}) e_R(x + ib/2)
        for b, xs in samples.items():
            p = ModularParam(b)
            for x in xs[:5]:
                lhs = fev(FI.ENS, x - 0.5j * b, p)
                rhs = (1 - 1j * cmath.exp(math.pi * b * x)) * fev(FI.ER, x + 0.5j * b, p)
                assert abs(lhs / rhs - 1) < 1e-8

    def test_super_dilog_g_route_consistency(self, samples):
        # product-formula e_NS/e_R vs zeta_b^2 / G_{NS,R}(Q/2 - i x)
        for b, xs in samples.items():
            p = ModularParam(b)
            for x in xs[:6]:
                assert abs(fev(FI.ENS, x, p) - ens_from_g(x, p)) < 1e-9
                assert abs(fev(FI.ER, x, p) - er_from_g(x, p)) < 1e-9

    def test_gamma_ns_decomposition(self, samples):
        # Gamma_NS(x) = Gamma_b(x/2) Gamma_b((x+Q)/2) recomposed matches GNS chain
        for b, xs in samples.items():
            p = ModularParam(b)
            for x in xs[:5]:
                lg = lambda z: log_gamma_b(z, p)
                s_ns = cmath.exp(lg(x / 2) + lg((x + p.Q) / 2)
                                 - lg((p.Q - x) / 2) - lg(p.Q - x / 2))
                direct = p.zeta_0 * cmath.exp(-0.25j * math.pi * x * (p.Q - x)) * s_ns
                assert abs(direct - fev(FI.GNS, x, p)) / abs(direct) < 1e-10


class TestResidueAndAsymptotics:
    def test_residues(self):
        for b in (0.8, 1.23):
            rep = ck.check_residue(ModularParam(b))
            assert rep["gamma_b_residue"] < 1e-6
            assert rep["double_sine_rotated_residue"] < 1e-6
            assert rep["richardson_stability"] < 1e-6

    def test_asymptotics(self):
        p = ModularParam(0.8)
        assert ck.check_asymptotics(FI.EB, -1, 8.0, p) < 1e-6
        assert ck.check_asymptotics(FI.GB, +1, 10.0, p) < 1e-6
        assert ck.check_asymptotics(FI.GB, -1, 10.0, p) < 1e-6
        assert ck.check_asymptotics(FI.ENS, +1, 8.0, p) < 1e-5
        assert ck.check_asymptotics(FI.ER, +1, 8.0, p) < 1e-5


class TestPoleLattices:
    def test_parity_split_lattices(self):
        p = ModularParam(0.75)
        for n in range(4):
            for m in range(4):
                if n + m > 6:
                    continue
                pt = -(n * p.b + m / p.b)
                parity = (n + m) % 2
                with pytest.raises(PoleError):
                    fev(FI.SB, pt + 0j, p)
                if parity == 0:
                    with pytest.raises(PoleError):
                        fev(FI.GNS, pt + 0j, p)
                    fev(FI.GR, pt + 0.0j, p) if (n, m) != (0, 0) else None
                else:
                    with pytest.raises(PoleError):
                        fev(FI.GR, pt + 0j, p)
                    # opposite-parity function is regular there
                    fev(FI.GNS, pt + 0j, p)
                # e_b lattice sits at i(Q/2 + lattice)
                with pytest.raises(PoleError):
                    fev(FI.EB, 1j * (p.Q / 2 + n * p.b + m / p.b), p)

    def test_gb_small_branch_cut(self):
        p = ModularParam(0.8)
        with pytest.raises(DomainError):
            fev(FI.GB_SMALL, -0.5 + 0j, p)


class TestFastDilog:
    def test_cross_validation_against_chain(self):
        for b in (0.7, 0.8, 1.2):
            p = ModularParam(b)
            s = fd.splice_point(b)
            xs = np.linspace(-s - 2, s + 2, 23)
            fast = fd.eb(xs, p)
            chain = np.array([fev(FI.EB, complex(x), p) for x in xs])
            assert np.max(np.abs(fast - chain)) < 1e-10

    def test_super_variants_match_chain(self):
        p = ModularParam(0.8)
        xs = np.linspace(-6, 6, 13)
        assert np.max(np.abs(fd.e_r(xs, p)
                             - [fev(FI.ER, complex(x), p) for x in xs])) < 1e-10
        assert np.max(np.abs(fd.e_ns(xs, p)
                             - [fev(FI.ENS, complex(x), p) for x in xs])) < 1e-10

    def test_unimodular_on_real_line(self):
        p = ModularParam(1.2)
        xs = np.linspace(-30, 30, 4001)
        assert np.max(np.abs(np.abs(fd.eb(xs, p)) - 1)) < 1e-10

    def test_splice_discontinuity(self):
        for b in (0.7, 0.8, 0.9, 1.2, 1.23):
            assert fd.splice_discontinuity(ModularParam(b)) < 1e-8
