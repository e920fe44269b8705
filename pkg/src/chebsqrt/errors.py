"""Exception types shared across the package."""


class ChebsqrtError(ValueError):
    """Base class for every domain error raised by this package."""


class ZeroDenominator(ChebsqrtError):
    """Denominator polynomial is identically zero."""


class PoleAtPoint(ChebsqrtError):
    """Exact evaluation requested at a zero of the denominator."""


class NotAnalyticAtZero(ChebsqrtError):
    """Taylor extraction requires a nonzero constant term in the denominator."""


class BadRootOrder(ChebsqrtError):
    """Root order p must be an integer >= 2."""


class DegenerateStep(ChebsqrtError):
    """An iteration step hit an identically-zero denominator."""


class BadIndex(ChebsqrtError):
    """Index outside the domain of the requested quantity."""


class NearPole(ChebsqrtError):
    """Evaluation point too close to a pole for the working precision."""


class OnBranchCut(ChebsqrtError):
    """Point lies on the branch cut [1, +inf) of the principal square root."""


class CapExceeded(ChebsqrtError):
    """Iteration count or series cutoff exceeds the configured cap."""
