"""Exception types shared across the package."""


class InputDomainError(ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class BvpSolveError(RuntimeError):
    """The discrete two-point boundary value problem could not be solved."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class StiffnessError(RuntimeError):
    """Adaptive step size underflowed; the problem is too stiff at this resolution."""


class IntegratorFaultError(RuntimeError):
    """The Lyapunov energy increased beyond the configured tolerance."""


class ModulationFailureError(RuntimeError):
    """Newton iteration on the orthogonality conditions did not converge."""

    def __init__(self, message, residuals=None, zeta=None):
        super().__init__(message)
        self.residuals = residuals
        self.zeta = zeta


class IllSeparatedError(ModulationFailureError):
    """Soliton centers collided during the modulation solve."""


class CollisionError(RuntimeError):
    """Center ordering was violated during a soliton-center integration.

    Expected for same-sign neighbor experiments; carries the partial
    trajectory on the ``trajectory`` attribute.
    """

    def __init__(self, message, trajectory=None):
        super().__init__(message)
        self.trajectory = trajectory


class ResolutionError(RuntimeError):
    """The wave solver lost stability (non-finite values outside frozen points)."""


class FitError(RuntimeError):
    """A regression was requested on an insufficient data span."""


class QuadratureRefinementError(RuntimeError):
    """A singular quadrature did not converge under refinement."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ConfigError(ValueError):
    """An experiment configuration failed schema validation."""
