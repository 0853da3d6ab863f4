"""Problem parameters for the wave equation u_tt = u_xx + f(u).

Two nonlinearities are supported: the signed power f(u) = |u|^(p-1) u and
the unsigned power f(u) = |u|^p.  Everything downstream (self-similar
profiles, energies, soliton interactions) is parametrized by the exponent
p > 1 and the variant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import InputDomainError


class Variant(str, Enum):
    SIGNED = "signed"      # f(u) = |u|^{p-1} u
    UNSIGNED = "unsigned"  # f(u) = |u|^p


@dataclass(frozen=True)
class Params:
    """Exponent, nonlinearity variant and the derived constants.

    kappa0 is the amplitude of the constant self-similar soliton and
    satisfies kappa0^(p-1) = 2(p+1)/(p-1)^2 exactly.  eps0 = 1/1000 is the
    fixed weight used in the telescoped gap sum sigma.
    """

    p: float
    variant: Variant = Variant.SIGNED
    eps0: float = field(default=1e-3, init=False)

    def __post_init__(self):
        if not self.p > 1.0:
            raise InputDomainError(f"exponent p must exceed 1, got {self.p}")
        if not isinstance(self.variant, Variant):
            object.__setattr__(self, "variant", Variant(self.variant))

    @property
    def kappa0(self) -> float:
        return (2.0 * (self.p + 1.0) / (self.p - 1.0) ** 2) ** (1.0 / (self.p - 1.0))

    @property
    def nu(self) -> float:
        """Self-similar scaling exponent 2/(p-1)."""
        return 2.0 / (self.p - 1.0)

    @property
    def cp(self) -> float:
        """Linear coefficient 2(p+1)/(p-1)^2 of the self-similar equation."""
        return 2.0 * (self.p + 1.0) / (self.p - 1.0) ** 2

    def nonlinearity(self, u):
        """Pointwise f(u) for the configured variant."""
        u = np.asarray(u)
        if self.variant is Variant.SIGNED:
            return np.abs(u) ** (self.p - 1.0) * u
        return np.abs(u) ** self.p

    def potential(self, u):
        """Pointwise antiderivative of f entering the Lyapunov functional.

        Signed variant: |u|^(p+1)/(p+1).  Unsigned variant: |u|^p u/(p+1),
        matching the modified functional of the |u|^p equation.
        """
        u = np.asarray(u)
        if self.variant is Variant.SIGNED:
            return np.abs(u) ** (self.p + 1.0) / (self.p + 1.0)
        return np.abs(u) ** self.p * u / (self.p + 1.0)
