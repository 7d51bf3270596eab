"""Exception hierarchy shared by the solver modules."""


class ToricSolveError(Exception):
    """Base class for all errors raised by :mod:`toricsolve`."""


class PolySyntaxError(ToricSolveError, ValueError):
    """Raised when polynomial text cannot be parsed.

    The offending character offset is kept in ``position``.
    """

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class DimensionMismatch(ToricSolveError, ValueError):
    """Inputs live in different ambient dimensions or have the wrong count."""


class DegenerateLifting(ToricSolveError):
    """A lifting produced a non-fine or non-unique lower hull; retry with a new seed."""


class DeltaNotGeneric(ToricSolveError):
    """A lattice point of the shifted Minkowski sum lies on a cell wall."""


class SingularM11(ToricSolveError):
    """The eliminated block of a Macaulay split is singular (non-generic data)."""


class CoordinateRecoveryFailed(ToricSolveError):
    """Coordinates could not be read off the eigenvectors."""


class EigenConvergenceError(ToricSolveError):
    """The eigensolver did not converge; ``partial`` holds whatever was computed."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class DimensionUnstable(ToricSolveError):
    """The quotient dimension differs between two degrees (solutions at infinity?)."""


class ResidualFailure(ToricSolveError):
    """Some computed points do not satisfy the system within tolerance."""
