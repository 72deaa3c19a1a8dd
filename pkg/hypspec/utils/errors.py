"""Exception types."""


class HypspecError(Exception):
    """Base class for all hypspec errors."""


class DomainError(HypspecError, ValueError):
    """An operation was called outside its domain of definition."""


class ConvergenceError(HypspecError, ArithmeticError):
    """A series, quadrature or ODE integration did not reach its tolerance."""


class IllConditionedError(ConvergenceError):
    """A least-squares fit exceeded the condition-number cap."""


class UsageError(HypspecError, ValueError):
    """Invalid command-line configuration."""
