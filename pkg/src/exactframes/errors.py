"""Exception types raised across the package."""

from __future__ import annotations


class ExactFramesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ExactFramesError, ValueError):
    """An argument value is outside the domain of the operation."""


class DimensionError(ExactFramesError, ValueError):
    """Matrix shapes are incompatible with the requested operation."""


class PreconditionError(ExactFramesError, ValueError):
    """An input fails a structural precondition of the operation."""


class CombineModeError(PreconditionError):
    """A block cannot be brought into the form the combine mode requires."""


class BlockFormError(PreconditionError):
    """The requested block form is not unitary for the given coefficients.

    Carries the exact Gram defect so callers can report it.
    """

    def __init__(self, message: str, defect) -> None:
        super().__init__(message)
        self.defect = defect


class TableValidationError(ExactFramesError, ValueError):
    """A two-row table violates its defining identities.

    ``bad_columns`` lists 1-based columns whose pair sum is wrong,
    ``row_sums`` holds the actual (top, bottom) sums and
    ``expected_row_sum`` the value both must equal.
    """

    def __init__(self, message: str, bad_columns=(), row_sums=None,
                 expected_row_sum=None) -> None:
        super().__init__(message)
        self.bad_columns = tuple(bad_columns)
        self.row_sums = row_sums
        self.expected_row_sum = expected_row_sum


class ParseError(ExactFramesError, ValueError):
    """Malformed textual input; the message names the offending location."""


class ResourceLimitError(ExactFramesError):
    """The requested computation exceeds a hard resource cap."""
