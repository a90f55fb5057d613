"""Shared exception types."""


class TickSeasonError(Exception):
    """Base class for errors raised by this package."""


class InvalidShapeError(TickSeasonError, ValueError):
    """Shape parameters do not admit a positive activity function on [0, T]."""


class ConvergenceError(TickSeasonError, RuntimeError):
    """Optimizer hit its iteration cap; carries the best model found so far."""

    def __init__(self, message, best=None, report=None):
        super().__init__(message)
        self.best = best
        self.report = report


class CovarianceNotPositiveDefiniteError(TickSeasonError, ValueError):
    """Requested mark covariance is not positive definite for the drawn event times."""

    def __init__(self, message, day_index=None):
        super().__init__(message)
        self.day_index = day_index


class ParseFailure(TickSeasonError, ValueError):
    """Malformed input row in fail-fast parsing mode."""

    def __init__(self, message, lineno=None):
        super().__init__(message)
        self.lineno = lineno
