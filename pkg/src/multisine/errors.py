"""Exception hierarchy shared by every module."""


class MultisineError(Exception):
    """Base class for all errors raised by the package."""


class DomainError(MultisineError, ValueError):
    """An argument lies outside the domain of the requested function."""


class BudgetExceededError(MultisineError):
    """A summation needed more terms than the configured budget."""


class ConvergenceError(MultisineError):
    """Accelerated or extrapolated estimates failed to settle."""
