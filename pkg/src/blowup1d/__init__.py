"""Numerical laboratory for blow-up of the 1D semilinear wave equation.

Modules
-------
params, grid, profiles
    Static vocabulary: exponent/variant, the tanh-stretched grid, solitons,
    weights, norms, energies and the spectral projector ingredients.
selfsimilar
    The u -> w transform, the self-similar evolution and its Lyapunov
    diagnostics.
modulation
    Soliton decompositions via orthogonality conditions, the (F1, q_minus)
    splitting and the interaction terms of the remainder equation.
toda
    The exponential nearest-neighbor system obeyed by soliton centers,
    its closed-form two-center oracle and the log-time gap fits.
physical
    Direct finite-difference solver for the wave equation, blow-up time
    estimation, curve reconstruction and characteristic-point classification.
quadrature
    The table of soliton interaction integrals and their asymptotic
    constants.
cli
    Reproducible experiment runner emitting CSV artifacts and manifests.
"""

from .params import Params, Variant
from .grid import Field, Representation, WState, XiGrid

__version__ = "0.1.0"

__all__ = [
    "Params",
    "Variant",
    "Field",
    "Representation",
    "WState",
    "XiGrid",
    "__version__",
]
