"""Tests for the static profile vocabulary: solitons, weights, norms, modes."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from blowup1d.errors import InputDomainError
from blowup1d.grid import Field, Representation, WState, XiGrid, transform
from blowup1d.params import Params, Variant
from blowup1d import profiles as pf

P3 = Params(3.0)
P2 = Params(2.0)
GRID = XiGrid.default()


# ---------------------------------------------------------------------- kappa


def test_kappa_at_d_zero_is_kappa0():
    assert pf.kappa(0.0, 0.73, P3) == pytest.approx(np.sqrt(2.0), rel=1e-14)
    assert pf.kappa(0.0, -0.2, P3) == pytest.approx(P3.kappa0, rel=1e-14)


def test_kappa_peak_identity():
    # at y = -d the weighted value recovers kappa0
    for d in (-0.7, 0.1, 0.9):
        v = pf.kappa(d, -d, P3) * (1.0 - d * d) ** (1.0 / (P3.p - 1.0))
        assert v == pytest.approx(P3.kappa0, rel=1e-13)


def test_kappa_extended_precision_value():
    # frozen from a 40-digit direct evaluation of the formula
    assert pf.kappa(0.5, 0.25, P3) == pytest.approx(1.0886621079036347103, rel=1e-15)


def test_kappa_domain_errors():
    with pytest.raises(InputDomainError):
        pf.kappa(1.0, 0.0, P3)
    with pytest.raises(InputDomainError):
        pf.kappa(0.0, -1.0, P3)


@settings(max_examples=100, deadline=None)
@given(
    xi=st.floats(-4.0, 4.0, allow_nan=False),
    zeta=st.floats(-3.0, 3.0, allow_nan=False),
)
def test_kappa_tanh_identity(xi, zeta):
    # kappa(d, tanh xi) (1-y^2)^(1/(p-1)) = kappa_bar(xi - zeta), d = -tanh zeta
    d = -np.tanh(zeta)
    y = np.tanh(xi)
    lhs = pf.kappa(d, y, P3) * (1.0 - y * y) ** (1.0 / (P3.p - 1.0))
    assert abs(lhs - pf.kappa_bar(xi - zeta, P3)) < 1e-12


def test_kappa_bar_even_max_and_decay():
    assert pf.kappa_bar(0.0, P3) == pytest.approx(P3.kappa0, rel=1e-15)
    assert pf.kappa_bar(1.3, P3) == pytest.approx(pf.kappa_bar(-1.3, P3), rel=1e-15)
    # tail prefactor: kappa_bar(z) ~ kappa0 2^nu exp(-nu z)
    z = 18.0
    expect = P3.kappa0 * 2.0**P3.nu * np.exp(-P3.nu * z)
    assert pf.kappa_bar(z, P3) == pytest.approx(expect, rel=1e-13)


# ------------------------------------------------------------------ weight rho


def test_rho_values_and_integral():
    assert pf.rho(0.0, P3) == 1.0
    y = 1.0 - 1e-9
    assert pf.rho(y, P3) == pytest.approx((1.0 - y * y) ** 1.0, rel=1e-12)
    assert GRID.quad_y(pf.rho(GRID.y, P3)) == pytest.approx(4.0 / 3.0, rel=1e-12)
    assert GRID.quad_y(pf.rho(GRID.y, P2)) == pytest.approx(16.0 / 15.0, rel=1e-12)


def test_weight_table_matches_rho():
    tbl = pf.weight_table(GRID, P3)
    assert tbl.rep is Representation.Y
    assert np.allclose(tbl.values, pf.rho(GRID.y, P3))


# ---------------------------------------------------------------- norms, energy


def test_norms_zero_state():
    z = np.zeros(GRID.n)
    assert pf.norm_H((z, z), GRID, P3) == 0.0
    assert pf.norm_H0(z, GRID, P3) == 0.0


def test_norm_H_constant_soliton():
    st_ = WState(GRID, np.full(GRID.n, P3.kappa0), np.zeros(GRID.n))
    assert pf.norm_H(st_, params=P3) ** 2 == pytest.approx(8.0 / 3.0, rel=1e-12)


def test_norm_H_kappa_d_bounded():
    vals = []
    for d in np.linspace(-0.9, 0.9, 7):
        st_ = WState(GRID, pf.kappa(d, GRID.y, P3), np.zeros(GRID.n))
        vals.append(pf.norm_H(st_, params=P3))
    assert np.all(np.isfinite(vals))
    assert max(vals) < 10.0


@settings(max_examples=40, deadline=None)
@given(alpha=st.floats(-8.0, 8.0, allow_nan=False))
def test_norm_homogeneity(alpha):
    rng = np.random.default_rng(7)
    q1 = np.exp(-0.3 * GRID.xi**2) * rng.standard_normal(GRID.n)
    q2 = np.exp(-0.3 * GRID.xi**2) * rng.standard_normal(GRID.n)
    base = pf.norm_H((q1, q2), GRID, P3)
    scaled = pf.norm_H((alpha * q1, alpha * q2), GRID, P3)
    assert scaled == pytest.approx(abs(alpha) * base, rel=1e-12, abs=1e-12)


def test_energy_zero_and_constant():
    z = np.zeros(GRID.n)
    assert pf.energy(WState(GRID, z, z), P3) == 0.0
    st_ = WState(GRID, np.full(GRID.n, P3.kappa0), z)
    assert pf.energy(st_, P3) == pytest.approx(4.0 / 3.0, rel=1e-12)
    st2 = WState(GRID, np.full(GRID.n, P2.kappa0), z)
    assert pf.energy(st2, P2) == pytest.approx(38.4, rel=1e-12)


def test_energy_quadrature_oracle():
    # independent oracle: adaptive quadrature of the defining integral
    d = 0.4
    p = P3.p

    def integrand(y):
        w = pf.kappa(d, y, P3)
        return ((p + 1) / (p - 1) ** 2 * w**2 - abs(w) ** (p + 1) / (p + 1)) * (
            1 - y * y
        ) ** (2 / (p - 1))

    # gradient term via analytic derivative of kappa in y
    def grad_term(y):
        e = 1.0 / (p - 1.0)
        dk = pf.kappa(d, y, P3) * (-2.0 * e) * d / (1.0 + d * y)
        return 0.5 * dk**2 * (1 - y * y) ** (2 / (p - 1) + 1)

    ref = quad(integrand, -1, 1, limit=200)[0] + quad(grad_term, -1, 1, limit=200)[0]
    st_ = WState(GRID, pf.kappa(d, GRID.y, P3), np.zeros(GRID.n))
    # the discrete gradient term carries the O(h^2) derivative error
    assert pf.energy(st_, P3) == pytest.approx(ref, rel=5e-5)
    fine = XiGrid(-12.0, 12.0, 8193)
    st_fine = WState(fine, pf.kappa(d, fine.y, P3), np.zeros(fine.n))
    assert pf.energy(st_fine, P3) == pytest.approx(ref, rel=5e-6)


def test_energy_same_level_across_d():
    # E(kappa(d)) = E(-kappa(d)) = E(kappa0) at quadrature tolerance
    vals = []
    for d in (-0.8, 0.0, 0.8):
        k = pf.kappa(d, GRID.y, P3)
        vals.append(pf.energy(WState(GRID, k, np.zeros(GRID.n)), P3))
        vals.append(pf.energy(WState(GRID, -k, np.zeros(GRID.n)), P3))
    assert np.allclose(vals, 4.0 / 3.0, rtol=1e-4)


def test_unsigned_energy_matches_signed_on_positive_fields():
    k = pf.kappa(0.3, GRID.y, P3)
    s = WState(GRID, k, np.zeros(GRID.n))
    e_signed = pf.energy(s, P3)
    e_unsigned = pf.energy(s, Params(3.0, Variant.UNSIGNED))
    assert e_signed == pytest.approx(e_unsigned, rel=1e-13)


def test_hardy_sobolev_control():
    # |h|_{L^{p+1}_rho} + sup |h (1-y^2)^{1/(p-1)}| <= C |h|_{H0}, one fixed C
    rng = np.random.default_rng(11)
    C = 3.0
    for _ in range(50):
        c0, c1, c2 = rng.standard_normal(3)
        width = rng.uniform(0.5, 3.0)
        h = (c0 + c1 * np.tanh(GRID.xi) + c2 * GRID.xi) * np.exp(
            -((GRID.xi / width) ** 2)
        )
        lhs = pf.norm_Lp1_rho(h, GRID, P3) + pf.sup_weighted(h, GRID, P3)
        assert lhs <= C * pf.norm_H0(h, GRID, P3)


# ------------------------------------------------------------- transformations


def test_transform_constant_to_bar():
    f = Field(GRID, np.ones(GRID.n), Representation.Y)
    g = transform(f, Representation.BAR, P3)
    expect = GRID.sech2 ** (1.0 / (P3.p - 1.0))
    assert np.allclose(g.values, expect, rtol=1e-14)


def test_transform_round_trip_identity():
    rng = np.random.default_rng(3)
    vals = rng.standard_normal(GRID.n)
    f = Field(GRID, vals, Representation.Y)
    back = transform(transform(f, Representation.BAR, P3), Representation.Y, P3)
    assert np.max(np.abs(back.values - vals)) < 1e-12
    back2 = transform(transform(f, Representation.HAT, P3), Representation.Y, P3)
    assert np.max(np.abs(back2.values - vals)) < 1e-12


def test_flat_norm_equivalence():
    # |r|_H comparable to the flat H1 x L2 norm of (bar r1, hat r2)
    rng = np.random.default_rng(5)
    ratios = []
    for _ in range(50):
        width = rng.uniform(0.8, 3.0)
        r1 = rng.standard_normal() * np.exp(-((GRID.xi / width) ** 2))
        r2 = rng.standard_normal() * np.exp(-((GRID.xi / width) ** 2)) * GRID.xi
        h_norm = pf.norm_H((r1, r2), GRID, P3)
        r1b = Field(GRID, r1).to(Representation.BAR, P3).values
        r2h = Field(GRID, r2).to(Representation.HAT, P3).values
        flat = np.sqrt(
            GRID.quad_xi(r1b**2)
            + GRID.quad_xi(GRID.d_dxi(r1b) ** 2)
            + GRID.quad_xi(r2h**2)
        )
        ratios.append(flat / h_norm)
    assert 0.2 < min(ratios) and max(ratios) < 5.0


# ------------------------------------------------------------------ F, W modes


def test_F0_at_d_zero():
    mode = pf.F_lambda(0, 0.0, GRID, P3)
    assert np.allclose(mode.f1, GRID.y, rtol=1e-13)
    assert np.all(mode.f2 == 0.0)


def test_F_norm_bounded_near_edge():
    for d in (-0.95, 0.95):
        f0 = pf.F_lambda(0, d, GRID, P3)
        f1 = pf.F_lambda(1, d, GRID, P3)
        total = pf.norm_H(f0.pair, GRID, P3) + pf.norm_H(f1.pair, GRID, P3)
        assert total < 6.0


def test_W_symmetry_at_d_zero():
    w0 = pf.W_lambda(0, 0.0, GRID, P3)
    w1 = pf.W_lambda(1, 0.0, GRID, P3)
    # W_{0,2} odd, W_{1,2} even in y
    assert np.max(np.abs(w0.f2 + w0.f2[::-1])) < 1e-12 * np.max(np.abs(w0.f2))
    assert np.max(np.abs(w1.f2 - w1.f2[::-1])) < 1e-12 * np.max(np.abs(w1.f2))


def test_W_norm_bounded_across_d():
    for d in np.linspace(-0.95, 0.95, 9):
        for lam in (0, 1):
            w = pf.W_lambda(lam, d, GRID, P3)
            assert pf.norm_H(w.pair, GRID, P3) < 5.0


def test_W_bvp_residual_second_order():
    g2 = XiGrid(-12.0, 12.0, 4097)
    for lam in (0, 1):
        r_coarse = pf.w1_bvp_residual(lam, 0.3, GRID, P3)
        r_fine = pf.w1_bvp_residual(lam, 0.3, g2, P3)
        assert r_coarse / r_fine == pytest.approx(4.0, rel=0.05)


def test_W0_normalization_constant_d_independent():
    # the paper's scaling makes c0 a pure constant in this parametrization
    cs = [pf.w_normalization(0, d, GRID, P3) for d in np.linspace(-0.9, 0.9, 19)]
    assert (max(cs) - min(cs)) / abs(np.mean(cs)) < 1e-7


def test_c1_positive_and_bounded():
    # c1(d) > 0 with c1(d) <= C (1-d^2)^{1/(p-1)}
    for d in np.linspace(-0.9, 0.9, 10):
        c1_tilde = pf.w_normalization(1, d, GRID, P3)
        c1 = c1_tilde * (1.0 - d * d) ** ((P3.nu + 1.0) / 2.0)
        assert c1 > 0.0
        assert c1 <= 1.0 * (1.0 - d * d) ** (1.0 / (P3.p - 1.0))


def test_projection_of_dkappa_identity():
    # pi_0^d((d_d kappa, 0)) = -2 kappa0 / ((p-1)(1-d^2))
    for d in (-0.6, 0.1, 0.45):
        a, _ = pf.projection_kernels(0, d, GRID, P3)
        val = GRID.quad_xi(a * pf.dkappa_dd(d, GRID.y, P3))
        expect = -2.0 * P3.kappa0 / ((P3.p - 1.0) * (1.0 - d * d))
        assert val == pytest.approx(expect, rel=1e-6)
