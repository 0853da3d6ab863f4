"""Static self-similar vocabulary: solitons, weights, norms, energies, modes.

The stationary family is

    kappa(d, y) = kappa0 (1-d^2)^(1/(p-1)) / (1+dy)^(2/(p-1)),   |d| < 1,

which in xi = artanh(y) is a translated bump:
kappa(d, tanh xi) (1-y^2)^(1/(p-1)) = kappa0 cosh^(-2/(p-1))(xi - zeta) with
d = -tanh(zeta).  The weight is rho(y) = (1-y^2)^(2/(p-1)), the energy E and
the norms of H and H0 are the weighted quadratics built on rho, and F_0, F_1
(eigenmodes of the linearization around kappa(d)) together with the adjoint
pair W_0, W_1 provide the spectral projections used by the modulation module.

W_{lambda,2} is explicit; W_{lambda,1} solves a two-point boundary value
problem which becomes, in the bar variable r_bar = (1-y^2)^(1/(p-1)) r,

    -r_bar'' + [nu^2 + (1 - cp) sech^2 xi] r_bar = g(xi),   nu = 2/(p-1),

with exponentially decaying data; it is discretized with second-order
centered differences on an extended grid so the homogeneous Dirichlet
truncation error stays below quadrature accuracy.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import solve_banded

from .errors import BvpSolveError, InputDomainError
from .grid import Field, Representation, WState, XiGrid
from .params import Params, Variant

__all__ = [
    "kappa",
    "kappa_bar",
    "dkappa_dd",
    "rho",
    "weight_table",
    "norm_H",
    "norm_H0",
    "inner_H",
    "energy",
    "F_lambda",
    "W_lambda",
    "ModePair",
]


def kappa(d, y, params: Params):
    """Stationary soliton kappa(d, y); requires |d| < 1 and |y| < 1."""
    d_arr = np.asarray(d, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    if np.any(np.abs(d_arr) >= 1.0):
        raise InputDomainError("kappa requires |d| < 1")
    if np.any(np.abs(y_arr) >= 1.0):
        raise InputDomainError("kappa requires |y| < 1")
    e = 1.0 / (params.p - 1.0)
    val = params.kappa0 * (1.0 - d_arr**2) ** e / (1.0 + d_arr * y_arr) ** (2.0 * e)
    return val if val.shape else float(val)


def kappa_bar(z, params: Params):
    """Soliton in the flat variable: kappa0 cosh^(-2/(p-1))(z)."""
    z_arr = np.asarray(z, dtype=float)
    val = params.kappa0 * np.cosh(z_arr) ** (-params.nu)
    return val if val.shape else float(val)


def dkappa_dd(d, y, params: Params):
    """Partial derivative of kappa with respect to d.

    Equals -2 kappa0 / ((p-1)(1-d^2)) times the first component of F_0.
    """
    e = 1.0 / (params.p - 1.0)
    d_arr = np.asarray(d, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    pref = -2.0 * params.kappa0 / ((params.p - 1.0) * (1.0 - d_arr**2))
    f01 = (1.0 - d_arr**2) ** e * (y_arr + d_arr) / (1.0 + d_arr * y_arr) ** (2.0 * e + 1.0)
    val = pref * f01
    return val if val.shape else float(val)


def rho(y, params: Params):
    """Gegenbauer-type weight (1-y^2)^(2/(p-1))."""
    y_arr = np.asarray(y, dtype=float)
    val = (1.0 - y_arr**2) ** params.nu
    return val if val.shape else float(val)


def weight_table(grid: XiGrid, params: Params) -> Field:
    """rho sampled on the grid, as a Y-form field."""
    return Field(grid, grid.sech2**params.nu, Representation.Y)


# ---------------------------------------------------------------------------
# quadrature weights for the H / H0 / energy quadratics, all in xi
# ---------------------------------------------------------------------------


def _wq_rho(grid: XiGrid, params: Params) -> np.ndarray:
    """Trapezoid weights for integration against rho dy."""
    return grid.trapz_weights * grid.sech2 ** (params.nu + 1.0)


def _wq_rho_over(grid: XiGrid, params: Params) -> np.ndarray:
    """Trapezoid weights for integration against rho/(1-y^2) dy."""
    return grid.trapz_weights * grid.sech2**params.nu


def norm_H0(values: np.ndarray, grid: XiGrid, params: Params) -> float:
    """H0 norm of a scalar Y-form field: (int (r'^2 (1-y^2) + r^2) rho dy)^(1/2).

    The gradient term uses the xi derivative, for which the chain rule and
    the Jacobian cancel into a plain flat integral.
    """
    r = np.asarray(values, dtype=float)
    dr = grid.d_dxi(r)
    w_rho = _wq_rho(grid, params)
    w_flat = grid.trapz_weights * grid.sech2**params.nu
    return float(np.sqrt(np.dot(w_rho, r * r) + np.dot(w_flat, dr * dr)))


def inner_H(q: tuple[np.ndarray, np.ndarray], r: tuple[np.ndarray, np.ndarray],
            grid: XiGrid, params: Params) -> float:
    """H inner product int (q1 r1 + q1' r1' (1-y^2) + q2 r2) rho dy."""
    q1, q2 = q
    r1, r2 = r
    dq1 = grid.d_dxi(np.asarray(q1, dtype=float))
    dr1 = grid.d_dxi(np.asarray(r1, dtype=float))
    w_rho = _wq_rho(grid, params)
    w_flat = grid.trapz_weights * grid.sech2**params.nu
    return float(
        np.dot(w_rho, q1 * r1) + np.dot(w_flat, dq1 * dr1) + np.dot(w_rho, q2 * r2)
    )


def norm_H(state: WState | tuple[np.ndarray, np.ndarray], grid: XiGrid | None = None,
           params: Params | None = None) -> float:
    """H norm of a pair (q1, q2) or a WState."""
    if isinstance(state, WState):
        pair = state.pair
        grid = state.grid
    else:
        pair = state
    if grid is None or params is None:
        raise InputDomainError("norm_H needs a grid and params")
    val = inner_H(pair, pair, grid, params)
    return float(np.sqrt(max(val, 0.0)))


def energy(state: WState, params: Params) -> float:
    """Lyapunov functional E(w, ds w) for the configured variant."""
    grid = state.grid
    w1, w2 = state.pair
    dw1 = grid.d_dxi(w1)
    w_rho = _wq_rho(grid, params)
    w_flat = grid.trapz_weights * grid.sech2**params.nu
    quad = (
        0.5 * np.dot(w_rho, w2 * w2)
        + 0.5 * np.dot(w_flat, dw1 * dw1)
        + (params.p + 1.0) / (params.p - 1.0) ** 2 * np.dot(w_rho, w1 * w1)
    )
    pot = np.dot(w_rho, params.potential(w1))
    return float(quad - pot)


def dissipation(state: WState, params: Params) -> float:
    """Instantaneous dissipation 4/(p-1) int (ds w)^2 rho/(1-y^2) dy."""
    w = _wq_rho_over(state.grid, params)
    return float(4.0 / (params.p - 1.0) * np.dot(w, state.w2 * state.w2))


def sup_weighted(values: np.ndarray, grid: XiGrid, params: Params) -> float:
    """sup over the grid of |r(y)| (1-y^2)^(1/(p-1))."""
    return float(np.max(np.abs(values) * grid.sech2 ** (1.0 / (params.p - 1.0))))


def norm_Lp1_rho(values: np.ndarray, grid: XiGrid, params: Params) -> float:
    """L^(p+1) norm weighted by rho."""
    w = _wq_rho(grid, params)
    return float(np.dot(w, np.abs(values) ** (params.p + 1.0)) ** (1.0 / (params.p + 1.0)))


# ---------------------------------------------------------------------------
# eigenmodes of the linearized operator and the adjoint projector pair
# ---------------------------------------------------------------------------


@dataclass
class ModePair:
    """A two-component mode in Y form tagged with its parameter and eigenvalue."""

    grid: XiGrid
    f1: np.ndarray
    f2: np.ndarray
    d: float
    lam: int

    @property
    def pair(self) -> tuple[np.ndarray, np.ndarray]:
        return self.f1, self.f2


def F_lambda(lam: int, d: float, grid: XiGrid, params: Params) -> ModePair:
    """Eigenmode F_lambda(d) of the linearization, lambda in {0, 1}.

    F_1 = (1-d^2)^(p/(p-1)) ((1+dy)^(-2/(p-1)-1), same),
    F_0 = (1-d^2)^(1/(p-1)) ((y+d)(1+dy)^(-2/(p-1)-1), 0).
    """
    if lam not in (0, 1):
        raise InputDomainError("lambda must be 0 or 1")
    if not abs(d) < 1.0:
        raise InputDomainError("F_lambda requires |d| < 1")
    p = params.p
    e = 1.0 / (p - 1.0)
    y = grid.y
    opd = 1.0 + d * y
    if lam == 1:
        comp = (1.0 - d * d) ** (p * e) * opd ** (-2.0 * e - 1.0)
        return ModePair(grid, comp.copy(), comp.copy(), d, 1)
    comp = (1.0 - d * d) ** e * (y + d) * opd ** (-2.0 * e - 1.0)
    return ModePair(grid, comp, np.zeros(grid.n), d, 0)


# -- W_{lambda,2} closed forms in bar variables -----------------------------


def _wbar2(lam: int, zeta: float, grid: XiGrid, params: Params):
    """Unnormalized bar-form W_{lambda,2} and its xi derivative."""
    nu = params.nu
    z = grid.xi - zeta
    if lam == 0:
        sech_nu = np.cosh(z) ** (-nu)
        w = params.kappa0 * np.tanh(z) * sech_nu
        dw = params.kappa0 * sech_nu * (1.0 / np.cosh(z) ** 2 - nu * np.tanh(z) ** 2)
    else:
        sech_xi = 1.0 / np.cosh(grid.xi)
        sech_z = np.cosh(z) ** (-nu - 1.0)
        w = sech_xi * sech_z
        dw = -w * (np.tanh(grid.xi) + (nu + 1.0) * np.tanh(z))
    return w, dw


def _pi_kernels(lam: int, zeta: float, grid: XiGrid, params: Params):
    """Unnormalized xi-space kernels (A, B) with pi(q) = int(A q1 + B q2) dxi.

    A collects (-L+1)W1 = RHS_lambda(W2) against rho dy, B collects W2
    against rho dy; both are assembled from the closed form of W2 so the
    projection involves no numerical differentiation.
    """
    nu = params.nu
    p = params.p
    xi = grid.xi
    sech = 1.0 / np.cosh(xi)
    th = np.tanh(xi)
    w2b, dw2b = _wbar2(lam, zeta, grid, params)
    a = (
        (lam - (p + 3.0) / (p - 1.0)) * w2b * sech ** (nu + 2.0)
        + 4.0 * nu * w2b * sech**nu
        - 2.0 * th * (dw2b + nu * th * w2b) * sech**nu
    )
    b = w2b * sech ** (nu + 2.0)
    return a, b


def _bvp_rhs(lam: int, zeta: float, xi: np.ndarray, params: Params) -> np.ndarray:
    """Bar-form right side g(xi) of the W_{lambda,1} boundary value problem."""
    nu = params.nu
    p = params.p
    sech = 1.0 / np.cosh(xi)
    th = np.tanh(xi)
    z = xi - zeta
    if lam == 0:
        sech_nu = np.cosh(z) ** (-nu)
        w2b = params.kappa0 * np.tanh(z) * sech_nu
        dw2b = params.kappa0 * sech_nu * (1.0 / np.cosh(z) ** 2 - nu * np.tanh(z) ** 2)
    else:
        w2b = sech * np.cosh(z) ** (-nu - 1.0)
        dw2b = -w2b * (th + (nu + 1.0) * np.tanh(z))
    return (
        (lam - (p + 3.0) / (p - 1.0)) * w2b * sech**2
        - 2.0 * th * dw2b
        - 2.0 * nu * th**2 * w2b
        + 4.0 * nu * w2b
    )


def _solve_w1_bar(lam: int, zeta: float, grid: XiGrid, params: Params) -> np.ndarray:
    """Solve -r'' + (nu^2 + (1-cp) sech^2) r = g on an extended grid.

    Second-order centered differences with homogeneous Dirichlet values; the
    domain is padded so the truncation error at the physical nodes is
    exponentially below the interior discretization error.  Returns bar-form
    nodal values on the physical grid.
    """
    h = grid.h
    pad = max(6.0, 0.5 * (grid.xi_max - grid.xi_min) / 2.0)
    m = int(np.ceil(pad / h))
    n_ext = grid.n + 2 * m
    xi = grid.xi_min - m * h + h * np.arange(n_ext)
    nu = params.nu
    pot = nu**2 + (1.0 - params.cp) / np.cosh(xi) ** 2
    g = _bvp_rhs(lam, zeta, xi, params)
    # interior unknowns 1..n_ext-2, Dirichlet zero at both ends
    n_int = n_ext - 2
    main = 2.0 / h**2 + pot[1:-1]
    off = np.full(n_int - 1, -1.0 / h**2)
    ab = np.zeros((3, n_int))
    ab[0, 1:] = off
    ab[1, :] = main
    ab[2, :-1] = off
    try:
        sol = solve_banded((1, 1), ab, g[1:-1])
    except Exception as exc:  # pragma: no cover - singular only on bad input
        raise BvpSolveError(
            f"W_{lam},1 solve failed", {"zeta": zeta, "n": grid.n, "p": params.p}
        ) from exc
    if not np.all(np.isfinite(sol)):
        raise BvpSolveError(
            f"W_{lam},1 solve returned non-finite values",
            {"zeta": zeta, "n": grid.n, "p": params.p},
        )
    full = np.zeros(n_ext)
    full[1:-1] = sol
    return full[m : m + grid.n]


@lru_cache(maxsize=512)
def _w_lambda_cached(lam: int, d: float, grid: XiGrid, p: float, variant: str):
    params = Params(p, Variant(variant))
    zeta = float(np.arctanh(-d))
    a_raw, b_raw = _pi_kernels(lam, zeta, grid, params)
    mode = F_lambda(lam, d, grid, params)
    raw = float(
        np.dot(grid.trapz_weights, a_raw * mode.f1) + np.dot(grid.trapz_weights, b_raw * mode.f2)
    )
    if abs(raw) < 1e-300:
        raise BvpSolveError("degenerate projector normalization", {"lam": lam, "d": d})
    c = 1.0 / raw
    w2_bar, _ = _wbar2(lam, zeta, grid, params)
    w1_bar = _solve_w1_bar(lam, zeta, grid, params)
    cosh_nu = np.cosh(grid.xi) ** params.nu
    w1 = c * w1_bar * cosh_nu
    w2 = c * w2_bar * cosh_nu
    return ModePair(grid, w1, w2, d, lam), c, c * a_raw, c * b_raw


def W_lambda(lam: int, d: float, grid: XiGrid, params: Params) -> ModePair:
    """Calibrated adjoint mode W_lambda(d) = (W1 from the BVP, explicit W2).

    The normalization constant is fixed so that the projection of
    F_lambda(d) equals one; the complementary orthogonality holds
    analytically and is pure quadrature here.
    """
    if lam not in (0, 1):
        raise InputDomainError("lambda must be 0 or 1")
    if not abs(d) < 1.0:
        raise InputDomainError("W_lambda requires |d| < 1")
    mode, _, _, _ = _w_lambda_cached(lam, float(d), grid, params.p, params.variant.value)
    return mode


def projection_kernels(lam: int, d: float, grid: XiGrid, params: Params):
    """Calibrated kernels (A, B) so that pi_lambda^d(q) = int(A q1 + B q2) dxi."""
    _, _, a, b = _w_lambda_cached(lam, float(d), grid, params.p, params.variant.value)
    return a, b


def w_normalization(lam: int, d: float, grid: XiGrid, params: Params) -> float:
    """Calibrated normalization constant of W_lambda(d)."""
    _, c, _, _ = _w_lambda_cached(lam, float(d), grid, params.p, params.variant.value)
    return c


def w1_bvp_residual(lam: int, d: float, grid: XiGrid, params: Params) -> float:
    """Max norm of the residual of the solved W_{lambda,1} equation.

    Plugs the solution back into a fourth-order discretization of the
    bar-form equation, so the result tracks the O(h^2) error of the
    second-order solve instead of vanishing identically.
    """
    zeta = float(np.arctanh(-d))
    w1_bar = _solve_w1_bar(lam, zeta, grid, params)
    xi = grid.xi
    nu = params.nu
    pot = nu**2 + (1.0 - params.cp) / np.cosh(xi) ** 2
    g = _bvp_rhs(lam, zeta, xi, params)
    h = grid.h
    v = w1_bar
    lap4 = (-v[4:] + 16.0 * v[3:-1] - 30.0 * v[2:-2] + 16.0 * v[1:-3] - v[:-4]) / (
        12.0 * h**2
    )
    res = -lap4 + pot[2:-2] * v[2:-2] - g[2:-2]
    return float(np.max(np.abs(res)))
