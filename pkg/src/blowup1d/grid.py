"""Stretched grid in xi with y = tanh(xi), fields on it, and the bar/hat maps.

All functions of y in (-1, 1) are sampled on a uniform grid in xi.  The
Jacobian dy = (1 - y^2) dxi is folded into trapezoidal quadrature weights, so
weighted integrals over (-1, 1) become plain trapezoid sums in xi whose
integrands decay exponentially.

Three samplings of the same function are distinguished: the raw values r(y)
(Y form), r_bar = (1-y^2)^(1/(p-1)) r (bar form) and
r_hat = (1-y^2)^(1/(p-1)+1/2) r (hat form).  The bar/hat forms are the flat
L2 variables in xi.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InputDomainError
from .params import Params


class Representation(Enum):
    Y = "y"      # samples of r(y)
    BAR = "bar"  # (1-y^2)^{1/(p-1)} r
    HAT = "hat"  # (1-y^2)^{1/(p-1)+1/2} r


@dataclass(frozen=True, eq=True)
class XiGrid:
    """Uniform grid xi_min..xi_max with n nodes and y = tanh(xi) images."""

    xi_min: float
    xi_max: float
    n: int

    def __post_init__(self):
        if self.n < 8:
            raise InputDomainError("grid needs at least 8 nodes")
        if not self.xi_max > self.xi_min:
            raise InputDomainError("xi_max must exceed xi_min")

    @classmethod
    def default(cls, xi_max: float = 12.0, n: int = 2049) -> "XiGrid":
        return cls(-xi_max, xi_max, n)

    @property
    def h(self) -> float:
        return (self.xi_max - self.xi_min) / (self.n - 1)

    @property
    def xi(self) -> np.ndarray:
        return np.linspace(self.xi_min, self.xi_max, self.n)

    @property
    def y(self) -> np.ndarray:
        return np.tanh(self.xi)

    @property
    def sech2(self) -> np.ndarray:
        """1 - y^2 = sech^2 xi at the nodes."""
        return 1.0 / np.cosh(self.xi) ** 2

    @property
    def trapz_weights(self) -> np.ndarray:
        """Plain trapezoid weights in xi (no Jacobian)."""
        w = np.full(self.n, self.h)
        w[0] = w[-1] = 0.5 * self.h
        return w

    def quad_xi(self, values: np.ndarray) -> float:
        """Trapezoid integral of samples over xi."""
        w = self.trapz_weights
        return float(np.dot(w, values))

    def quad_y(self, values: np.ndarray) -> float:
        """Integral over y in (-1, 1) of samples given in Y form."""
        return self.quad_xi(values * self.sech2)

    def d_dxi(self, values: np.ndarray) -> np.ndarray:
        """Second-order first derivative in xi, one-sided at the ends."""
        v = np.asarray(values, dtype=float)
        out = np.empty_like(v)
        h = self.h
        out[1:-1] = (v[2:] - v[:-2]) / (2.0 * h)
        out[0] = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h)
        out[-1] = (3.0 * v[-1] - 4.0 * v[-2] + v[-3]) / (2.0 * h)
        return out

    def d_dy(self, values: np.ndarray) -> np.ndarray:
        """Derivative with respect to y via d/dy = cosh^2(xi) d/dxi."""
        return self.d_dxi(values) * np.cosh(self.xi) ** 2


@dataclass
class Field:
    """Scalar samples on a XiGrid tagged with their representation."""

    grid: XiGrid
    values: np.ndarray
    rep: Representation = Representation.Y

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.shape != (self.grid.n,):
            raise InputDomainError(
                f"field length {self.values.shape} does not match grid n={self.grid.n}"
            )

    def to(self, rep: Representation, params: Params) -> "Field":
        if rep is self.rep:
            return Field(self.grid, self.values.copy(), rep)
        expo = _rep_exponent(rep, params) - _rep_exponent(self.rep, params)
        return Field(self.grid, self.values * self.grid.sech2 ** expo, rep)


def _rep_exponent(rep: Representation, params: Params) -> float:
    """Power of (1-y^2) multiplying the Y-form values in representation rep."""
    if rep is Representation.Y:
        return 0.0
    if rep is Representation.BAR:
        return 1.0 / (params.p - 1.0)
    return 1.0 / (params.p - 1.0) + 0.5


def transform(field: Field, target: Representation, params: Params) -> Field:
    """Convert a field between Y, bar and hat samplings."""
    return field.to(target, params)


@dataclass
class WState:
    """Pair (w, ds w) in Y form on a shared grid at self-similar time s."""

    grid: XiGrid
    w1: np.ndarray
    w2: np.ndarray
    s: float = 0.0

    def __post_init__(self):
        self.w1 = np.asarray(self.w1, dtype=float)
        self.w2 = np.asarray(self.w2, dtype=float)
        if self.w1.shape != (self.grid.n,) or self.w2.shape != (self.grid.n,):
            raise InputDomainError("state components must match the grid")

    def copy(self) -> "WState":
        return WState(self.grid, self.w1.copy(), self.w2.copy(), self.s)

    @property
    def pair(self) -> tuple[np.ndarray, np.ndarray]:
        return self.w1, self.w2
