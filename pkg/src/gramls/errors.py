"""Exception types shared across the package."""

from __future__ import annotations


class DimensionError(ValueError):
    """Operands have incompatible shapes or lengths."""


class CsvFormatError(ValueError):
    """A CSV cell could not be parsed as a finite number.

    ``row`` and ``col`` are 1-based file coordinates (the header row, when
    present, counts as row 1).
    """

    def __init__(self, message: str, row: int, col: int):
        super().__init__(message)
        self.row = row
        self.col = col


class RankDeficientError(ArithmeticError):
    """A pivot fell below the rank tolerance during factorization.

    ``index`` is the 0-based column whose pivot collapsed; the column is
    numerically dependent on the columns before it.
    """

    def __init__(self, index: int, pivot: float, floor: float):
        super().__init__(
            f"column {index} is numerically dependent on the preceding columns "
            f"(pivot {pivot:.6g}, tolerance {floor:.6g})"
        )
        self.index = index
        self.pivot = pivot
        self.floor = floor


class SingularSystemError(ArithmeticError):
    """The reference elimination solver met a vanishing pivot."""


class NotSymmetricError(ValueError):
    """A weight matrix is not symmetric within tolerance."""


class InsufficientRowsError(ValueError):
    """Fewer rows than the fit requires (no residual degrees of freedom)."""


class InsufficientSamplesError(ValueError):
    """Too few samples for the interaction statistic."""
