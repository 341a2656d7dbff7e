"""Exception types shared across the package."""


class InvalidStateError(ValueError):
    """A matrix violates its contract (not Hermitian, bad trace, negative spectrum)."""


class DomainError(ValueError):
    """A parameter lies outside its allowed domain."""


class ConvergenceError(RuntimeError):
    """An iterative routine failed to converge within its sweep budget."""
