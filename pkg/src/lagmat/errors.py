"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input violates a mathematical precondition (not a basis, not symmetric, ...)."""


class GuardExceeded(DomainError):
    """An exhaustive search was asked to run beyond its size guard."""


class NotationError(ValueError):
    """Malformed basis notation or matrix document."""
