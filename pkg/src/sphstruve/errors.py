"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside an operation's declared domain."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole of the gamma function."""


class ConvergenceError(ArithmeticError):
    """A series or acceleration scheme failed to reach its tolerance."""


class UnknownIdentityError(KeyError):
    """Identity id not present in the verification catalog."""
