"""Exception types shared across the package.

Two families exist.  Subclasses of :class:`ValueError` signal bad input or a
violated precondition.  Subclasses of :class:`TheoremViolation` signal a
computed result that contradicts an established theorem; they indicate a bug
in this library (or a counterexample) and are never expected in normal use.
"""

from __future__ import annotations


class InputFormatError(ValueError):
    """A JSON input document with a missing or malformed field."""

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"field {field!r}: {message}")
        self.field = field


class InvalidTriangleError(ValueError):
    """Side lengths that are non-positive or break the triangle inequality."""

    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


class NoClassError(ValueError):
    """A cosine that has no mod-8 class (zero, irrational, or 4 | denominator)."""


class PreconditionError(ValueError):
    pass


class CoordinateError(ValueError):
    """Coordinates that are inexact, coincident, or give non-integer edge lengths."""


class NonIntegralError(ValueError):
    def __init__(self, i: int, j: int, squared: object) -> None:
        super().__init__(
            f"points {i} and {j} are at squared distance {squared}, "
            "which is not the square of an integer"
        )
        self.i = i
        self.j = j
        self.squared = squared


class NotBipartiteError(ValueError):
    pass


class TrailBreakError(ValueError):
    """A partial angle sum of the class trail has no class.

    On a wheel that does not close this is expected: once a residual group is
    finished without summing to a multiple of pi, the next partial sum mixes
    radicals and its cosine is irrational.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(message)
        self.position = position


class SearchLimitExceeded(RuntimeError):
    """Raised by the wheel search when a node or time budget runs out.

    ``cursor`` is the index of the first spoke sequence that was not finished;
    pass it back as ``start`` to resume.
    """

    def __init__(self, cursor: int, reason: str) -> None:
        super().__init__(f"search stopped ({reason}); resume from cursor {cursor}")
        self.cursor = cursor
        self.reason = reason


class TheoremViolation(RuntimeError):
    pass


class ResidualSumViolation(TheoremViolation):
    def __init__(self, residual: object, rotation: object) -> None:
        super().__init__(
            f"angles of residual {residual} on a closed wheel sum to {rotation}, "
            "not a multiple of pi"
        )
        self.residual = residual
        self.rotation = rotation


class Eq4Violation(TheoremViolation):
    pass


class CharacteristicViolation(TheoremViolation):
    pass
