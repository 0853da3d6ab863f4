"""Soliton interaction integrals and their asymptotic constants.

All entries are evaluated in the flat variable xi where the solitons are
pure cosh kernels, kappa_bar0(z) = kappa0 cosh^(-2/(p-1))(z); the change of
variables absorbs every endpoint weight exactly, e.g.

    I1 = int kappa(d_j)^a kappa(d_i)^b (1-y^2)^((a+b)/(p-1)-1) dy
       = kappa0^(a+b) int cosh^(-2a/(p-1))(z) cosh^(-2b/(p-1))(z + dz) dz.

Asymptotic models (gap -> infinity) follow the table: equal exponents decay
like |dz| exp(-2 b dz/(p-1)), unequal ones like exp(-2 min(a,b) dz/(p-1)),
and the leading constants are measured as large-gap limits of the ratio,
never asserted.

The only singular entry is J_i for p < 2 with sign-changing neighbor sums,
where |K_bar|^(p-2) blows up at the zeros of K_bar; those zeros are located
by bisection and the local piece is integrated after the regularizing
substitution v = |xi - z|^(p-1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InputDomainError, QuadratureRefinementError
from .params import Params

__all__ = [
    "Separators",
    "I1",
    "I2",
    "A_ijl",
    "c1_triple",
    "B_ijl",
    "J_i",
]


@dataclass(frozen=True)
class Separators:
    """Midpoint separators between ascending soliton centers.

    y_j = tanh((zeta_j + zeta_{j+1})/2) for j = 1..k-1 with y_0 = -1 and
    y_k = 1; the xi-space values theta_j are kept alongside.
    """

    zeta: tuple

    def __post_init__(self):
        z = np.asarray(self.zeta, dtype=float)
        if z.size < 1 or np.any(np.diff(z) <= 0):
            raise InputDomainError("centers must be strictly ascending")

    @property
    def k(self) -> int:
        return len(self.zeta)

    @property
    def theta(self) -> np.ndarray:
        """xi-space separators, theta_0 = -inf, theta_k = +inf."""
        z = np.asarray(self.zeta, dtype=float)
        mids = 0.5 * (z[:-1] + z[1:])
        return np.concatenate(([-np.inf], mids, [np.inf]))

    @property
    def y(self) -> np.ndarray:
        th = self.theta
        out = np.tanh(th[1:-1])
        return np.concatenate(([-1.0], out, [1.0]))


def _sech_pow(z, m):
    return np.cosh(z) ** (-m)


def _trapz(f, lo, hi, n=4001):
    z = np.linspace(lo, hi, n)
    v = f(z)
    return float(np.trapezoid(v, z))


def I1(alpha: float, beta: float, dzeta: float, params: Params,
        c0_ref_gap: float = 18.0):
    """Two-soliton overlap integral and its asymptotic model.

    Returns (numeric, asymptotic) where the asymptotic carries the measured
    large-gap constant C0 (ratio at a reference gap).
    """
    if alpha <= 0 or beta <= 0 or dzeta < 0:
        raise InputDomainError("I1 needs alpha, beta > 0 and dzeta >= 0")
    nu = params.nu
    lo, hi = -dzeta - 40.0, 40.0

    def integrand(z):
        return _sech_pow(z, alpha * nu) * _sech_pow(z + dzeta, beta * nu)

    pref = params.kappa0 ** (alpha + beta)
    numeric = pref * _trapz(integrand, lo, hi, n=int(40 * (hi - lo)) + 1)
    c0 = _i1_c0(alpha, beta, params, c0_ref_gap)
    asym = c0 * _i1_model(alpha, beta, dzeta, params)
    return numeric, asym


def _i1_model(alpha, beta, dzeta, params):
    nu = params.nu
    if alpha == beta:
        return dzeta * np.exp(-beta * nu * dzeta)
    return np.exp(-min(alpha, beta) * nu * dzeta)


def _i1_c0(alpha, beta, params, gap):
    nu = params.nu
    lo, hi = -gap - 40.0, 40.0

    def integrand(z):
        return _sech_pow(z, alpha * nu) * _sech_pow(z + gap, beta * nu)

    pref = params.kappa0 ** (alpha + beta)
    val = pref * _trapz(integrand, lo, hi, n=int(40 * (hi - lo)) + 1)
    return val / _i1_model(alpha, beta, gap, params)


def I2(alpha: float, beta: float, i: int, j: int, zeta, params: Params):
    """Separator-window overlap integral and the table's decay bound.

    Integrates kappa(d_j)^alpha kappa(d_i)^beta over the separator window
    around center j (0-based indices); returns (numeric, bound_model) with
    the bound evaluated at unit constant.
    """
    if i == j:
        raise InputDomainError("I2 requires i != j")
    sep = Separators(tuple(zeta))
    th = sep.theta
    zi, zj = sep.zeta[i], sep.zeta[j]
    nu = params.nu
    lo = th[j] if np.isfinite(th[j]) else zj - 40.0
    hi = th[j + 1] if np.isfinite(th[j + 1]) else zj + 40.0

    def integrand(z):
        return _sech_pow(z - zj, alpha * nu) * _sech_pow(z - zi, beta * nu)

    pref = params.kappa0 ** (alpha + beta)
    numeric = pref * _trapz(integrand, lo, hi, n=int(80 * (hi - lo)) + 1)

    gap_up = abs(sep.zeta[min(j + 1, sep.k - 1)] - zj) if j + 1 < sep.k else np.inf
    gap_dn = abs(zj - sep.zeta[j - 1]) if j - 1 >= 0 else np.inf

    def leg(gap):
        if not np.isfinite(gap):
            return 0.0
        if alpha == beta:
            return gap * np.exp(-2.0 * beta / (params.p - 1.0) * gap)
        if alpha > beta:
            return np.exp(-2.0 * beta / (params.p - 1.0) * gap)
        return np.exp(-(alpha + beta) / (params.p - 1.0) * gap)

    bound = leg(gap_up) + leg(gap_dn)
    return numeric, bound


def A_ijl(i: int, j: int, l: int, zeta, params: Params):
    """Cubic interaction integral with the odd tanh factor.

    Integrates (y+d_i)/(1+y d_i) kappa(d_i) kappa(d_j)^(p-1) kappa(d_l) rho
    over the separator window around center j (0-based), l != j.  The
    measure cancellation leaves pure cosh kernels in xi.
    """
    if l == j:
        raise InputDomainError("A_ijl requires l != j")
    sep = Separators(tuple(zeta))
    th = sep.theta
    zi, zj, zl = sep.zeta[i], sep.zeta[j], sep.zeta[l]
    nu = params.nu
    p = params.p
    lo = th[j] if np.isfinite(th[j]) else zj - 40.0
    hi = th[j + 1] if np.isfinite(th[j + 1]) else zj + 40.0

    def integrand(z):
        return (
            np.tanh(z - zi)
            * _sech_pow(z - zi, nu)
            * _sech_pow(z - zj, (p - 1.0) * nu)
            * _sech_pow(z - zl, nu)
        )

    pref = params.kappa0 ** (p + 1.0)
    return pref * _trapz(integrand, lo, hi, n=int(80 * (hi - lo)) + 1)


def c1_triple(params: Params) -> float:
    """The explicit adjacent-pair constant of the cubic interaction.

    c1'' = 2^(2/(p-1)) kappa0^(p+1) int cosh^(-2p/(p-1))(z) tanh(z)
           exp(2z/(p-1)) dz, evaluated through the positivity rearrangement
    over z > 0 where e^(nu z) - e^(-nu z) > 0.
    """
    nu = params.nu
    p = params.p

    def integrand(z):
        return (
            _sech_pow(z, p * nu)
            * np.tanh(z)
            * (np.exp(nu * z) - np.exp(-nu * z))
        )

    val = _trapz(integrand, 0.0, 60.0, n=6001)
    return float(2.0**nu * params.kappa0 ** (p + 1.0) * val)


def B_ijl(i: int, j: int, l: int, zeta, params: Params):
    """Mixed-power interaction bound integrand, l != j.

    Integrates kappa(d_i) kappa(d_j)^(p-pbar) kappa(d_l)^pbar rho over the
    separator window around center j, with pbar = min(p, 2).
    """
    if l == j:
        raise InputDomainError("B_ijl requires l != j")
    sep = Separators(tuple(zeta))
    th = sep.theta
    zi, zj, zl = sep.zeta[i], sep.zeta[j], sep.zeta[l]
    nu = params.nu
    p = params.p
    pbar = min(p, 2.0)
    lo = th[j] if np.isfinite(th[j]) else zj - 40.0
    hi = th[j + 1] if np.isfinite(th[j + 1]) else zj + 40.0

    def integrand(z):
        return (
            _sech_pow(z - zi, nu)
            * _sech_pow(z - zj, (p - pbar) * nu)
            * _sech_pow(z - zl, pbar * nu)
        )

    pref = params.kappa0 ** (p + 1.0)
    return pref * _trapz(integrand, lo, hi, n=int(80 * (hi - lo)) + 1)


def _kbar_unit(z, zeta, signs, nu):
    """Sign-weighted sum of unit cosh kernels."""
    acc = np.zeros_like(np.asarray(z, dtype=float))
    for zj, ej in zip(zeta, signs):
        acc = acc + ej * _sech_pow(np.asarray(z, dtype=float) - zj, nu)
    return acc


def _find_zero(f, lo, hi, iters=200):
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        return None
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if flo * fm < 0:
            hi, fhi = mid, fm
        else:
            lo, flo = mid, fm
    return 0.5 * (lo + hi)


def J_i(i: int, zeta, signs, params: Params, rtol: float = 1e-6):
    """J_i = int kappa(d_i) |K|^(p-2) dy, finite for every p > 1.

    For p >= 2 (or same-sign neighbors) this is a smooth xi integral.  For
    p < 2 with alternating neighbors the kernel has integrable
    |xi - z_j|^(p-2) singularities at the zeros z_j of K_bar; each is
    located by bisection and integrated under v = |xi - z_j|^(p-1), which
    flattens the singularity exactly.
    """
    zeta = np.asarray(zeta, dtype=float)
    signs = np.asarray(signs, dtype=float)
    if np.any(np.abs(signs) != 1.0):
        raise InputDomainError("signs must be +-1")
    nu = params.nu
    p = params.p
    zi = zeta[i]
    pref = params.kappa0 ** (p - 1.0)
    lo, hi = zeta[0] - 40.0, zeta[-1] + 40.0

    def full(z):
        return _sech_pow(z - zi, nu) * np.abs(_kbar_unit(z, zeta, signs, nu)) ** (
            p - 2.0
        )

    if p >= 2.0 or np.all(signs == signs[0]):
        return pref * _trapz(full, lo, hi, n=int(60 * (hi - lo)) + 1)

    # locate the zeros between alternating neighbors
    zeros = []
    for j in range(len(zeta) - 1):
        if signs[j] * signs[j + 1] < 0:
            z0 = _find_zero(
                lambda z: _kbar_unit(z, zeta, signs, nu), zeta[j] + 0.05, zeta[j + 1] - 0.05
            )
            if z0 is not None:
                zeros.append(z0)
    if not zeros:
        return pref * _trapz(full, lo, hi, n=int(60 * (hi - lo)) + 1)

    delta = 0.5
    total = 0.0
    cuts = [lo] + sorted(zeros) + [hi]
    # smooth pieces between singular windows
    for a, b in zip(cuts[:-1], cuts[1:]):
        seg_lo = a + (delta if a in zeros else 0.0)
        seg_hi = b - (delta if b in zeros else 0.0)
        if seg_hi > seg_lo:
            total += _trapz(full, seg_lo, seg_hi, n=int(120 * (seg_hi - seg_lo)) + 3)
    # singular windows: v = |t - z0|^(p-1) flattens the kernel, midpoint rule
    vals = []
    for n_sub in (400, 800, 1600):
        sing = 0.0
        v_max = delta ** (p - 1.0)
        dv = v_max / n_sub
        v = (np.arange(n_sub) + 0.5) * dv
        for z0 in zeros:
            for side in (-1.0, 1.0):
                t = z0 + side * v ** (1.0 / (p - 1.0))
                gsm = (
                    _sech_pow(t - zi, nu)
                    * np.abs(_kbar_unit(t, zeta, signs, nu)) ** (p - 2.0)
                    * np.abs(t - z0) ** (2.0 - p)
                )
                sing += dv * np.sum(gsm) / (p - 1.0)
        vals.append(sing)
    if abs(vals[-1] - vals[-2]) > rtol * abs(vals[-1]) + 1e-12:
        raise QuadratureRefinementError(
            "singular J_i quadrature did not converge",
            {"i": i, "p": p, "levels": vals},
        )
    return pref * (total + vals[-1])
