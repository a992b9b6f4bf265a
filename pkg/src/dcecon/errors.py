"""Exception types shared across the library."""


class EconModelError(Exception):
    """Base class for all library errors."""


class DomainError(EconModelError, ValueError):
    """An operation input lies outside its mathematical domain."""


class ParameterError(EconModelError, ValueError):
    """A configuration or model parameter is invalid."""


class DegenerateProblemError(EconModelError):
    """The optimization problem has no well-posed solution (e.g. no interior maximum)."""


class SingularSystemError(EconModelError):
    """A linear system is singular, rank deficient, or underdetermined."""


class InfeasibleProblemError(EconModelError):
    """The constraint set is empty."""


class UnboundedProblemError(EconModelError):
    """The objective is unbounded over the feasible set."""


class DataValidationError(EconModelError):
    """An input data file failed validation."""
