"""Exception hierarchy. The CLI maps these onto exit codes."""


class ZdgError(Exception):
    """Base class for all package errors."""


class ParameterError(ZdgError, ValueError):
    """Invalid argument: non-prime modulus, mismatched rings, bad format."""


class DomainError(ZdgError, ValueError):
    """Argument outside the domain of an operation (e.g. classifying a unit)."""


class SizeError(ZdgError):
    """A configured size cap would be exceeded."""


class NumericError(ZdgError, ArithmeticError):
    """Non-finite values, non-convergence, or unexpected complex roots."""


class TheoremViolation(ZdgError):
    """A certified identity failed. Should never be raised for valid input."""
