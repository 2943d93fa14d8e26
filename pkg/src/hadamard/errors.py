"""Exception hierarchy for the Hadamard construction toolkit.

Every error raised on purpose by the library derives from HadamardError, so
callers (the command line in particular) can separate bad input from
internal consistency failures with a single except clause per category.
"""

from src.enums import ValidationCode


class HadamardError(Exception):
    """Base exception for all construction and verification errors."""


class DimensionError(HadamardError):
    """Matrix or vector shapes do not fit the requested operation."""


class UndefinedProductError(HadamardError):
    """Hadamard product whose coordinate-wise products are all zero."""


class DomainError(HadamardError):
    """Hadamard transformation by a point that has a zero coordinate."""


class DegenerateInputError(HadamardError):
    """Coincident points, identical lines or an all-zero coordinate vector."""


class InvariantViolation(HadamardError):
    """An internal consistency check failed.

    Raised when two independent computations of the same object disagree,
    e.g. a closed-form intersection point and the kernel of the linear system.
    """


class ValidationError(HadamardError):
    """User input rejected before any construction happens.

    Attributes:
        code: Machine-readable reason
        index: Offending position in the input, when there is one
    """

    def __init__(self, code: ValidationCode, message: str, index: int | None = None):
        self.code = code
        self.index = index
        if index is not None:
            message = f"{message} (index {index})"
        super().__init__(message)
