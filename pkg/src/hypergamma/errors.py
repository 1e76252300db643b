"""Exception and warning types raised by the numeric routines."""


class HypergammaError(Exception):
    """Base class for computational failures."""


class NonConvergence(HypergammaError):
    """Refinement or iteration cap reached before the tolerance was met."""

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class SlowConvergence(NonConvergence):
    """A power series hit its term cap."""


class InvalidInterval(HypergammaError, ValueError):
    pass


class DomainError(HypergammaError, ValueError):
    pass


class NoBracket(HypergammaError, ValueError):
    pass


class OutOfImage(DomainError):
    """Requested value lies outside the image of a monotone map."""


class BranchError(HypergammaError):
    """Complex inversion did not settle on the selected branch."""


class AccuracyWarning(UserWarning):
    """Result is usable but below the advertised accuracy."""
