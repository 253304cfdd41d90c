"""Exception types shared across the package."""


class DomainError(ValueError):
    """Argument outside the region where a function is defined or certified."""


class PoleError(DomainError):
    """Argument too close to a pole of a meromorphic function."""

    def __init__(self, message, argument=None):
        super().__init__(message)
        self.argument = argument


class ConvergenceError(RuntimeError):
    """A truncated expansion would need more terms than allowed."""


class PreconditionError(ValueError):
    """Structural hypotheses (regime, genericity, flags) do not hold."""
