"""Exception types shared across the package."""


class LeonardError(Exception):
    """Base class for all errors raised by this package."""


class FieldMismatch(LeonardError, TypeError):
    pass


class DivisionByZero(LeonardError, ZeroDivisionError):
    pass


class InvalidField(LeonardError, ValueError):
    """Raised for a prime-field modulus that is not prime."""


class CharTwoUnsupported(LeonardError):
    pass


class SizeMismatch(LeonardError, ValueError):
    pass


class ZeroScale(LeonardError, ValueError):
    pass


class NotMultiplicityFree(LeonardError):
    """The supplied eigenvalues are not the exact, simple spectrum of the matrix."""


class InvalidInput(LeonardError, ValueError):
    """A parameter array failed validation where a valid one was required."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class BadCharacteristic(LeonardError):
    pass


class ConstraintViolated(LeonardError):
    """A family constructor's side condition failed.

    ``clause`` names the failing condition, e.g. ``"q^i != 1"``.
    """

    def __init__(self, clause, detail=""):
        super().__init__(f"{clause}: {detail}" if detail else clause)
        self.clause = clause
        self.detail = detail
