"""Exception types shared across the library."""


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


class ResourceLimitError(RuntimeError):
    """Raised when a computation would exceed a configured size budget."""


class NumericalError(RuntimeError):
    """Raised when an internal numerical consistency check fails."""
