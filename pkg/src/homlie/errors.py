"""Exception types shared across the package."""


class HomLieError(Exception):
    """Base class for every error raised by :mod:`homlie`."""


class InputError(HomLieError, ValueError):
    """Malformed input: shape mismatches, bad documents, dependent spans."""


class DomainError(HomLieError):
    """A mathematical precondition of an operation does not hold.

    ``report`` optionally carries the :class:`~homlie.algebra.ValidationReport`
    whose failures explain the violation.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InvariantViolation(HomLieError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
