"""Exception types shared across the package."""


class ThetaminError(Exception):
    """Base class for all package errors."""


class IterationLimitError(ThetaminError):
    """Fundamental-domain reduction did not stabilize within the iteration cap."""


class BudgetExceededError(ThetaminError):
    """A series could not be certified within the allowed number of terms."""


class CutoffExceededError(ThetaminError):
    """A lattice double sum would need a window larger than the configured cap."""


class NotOnGammaError(ThetaminError):
    """Operation requires a point on the vertical line x = 1/2."""


class RootNotBracketedError(ThetaminError):
    """Bisection endpoints do not bracket a sign change."""


class GridOutsideWindowError(ThetaminError):
    """Requested sweep grid leaves the validity window of the claim."""


class QuadratureFailureError(ThetaminError):
    """Adaptive quadrature exceeded its refinement depth cap."""
