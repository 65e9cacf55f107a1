"""Shared exception types."""


class LengrpError(Exception):
    """Base class for package errors."""


class PreconditionError(LengrpError):
    """An operation was called outside its stated domain."""


class ResourceExhausted(LengrpError):
    """A search exceeded its state budget.

    ``completed_radius`` is the largest radius whose sphere was fully
    enumerated before the budget ran out.
    """

    def __init__(self, message: str, completed_radius: int):
        super().__init__(message)
        self.completed_radius = completed_radius


class OracleExhausted(LengrpError):
    """A word-length query could not be answered within the allowed radius."""


class NumericalDegeneracyError(LengrpError):
    """A numeric eigenline computation hit a (near-)defective eigenvalue."""
