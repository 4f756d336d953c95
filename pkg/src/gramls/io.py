"""CSV input/output for matrices.

The reader is RFC-4180 style (via the stdlib ``csv`` module), one column per
variable, with an optional header row.  Cells must parse as finite decimal
numbers; failures report 1-based row/column coordinates, counting the header
as row 1 when present.  The writer formats every value with ``repr``, i.e.
shortest round-trip decimals, so written matrices re-read bit-identically.
"""

from __future__ import annotations

import csv
import math
from typing import IO, Sequence

import numpy as np

from .errors import CsvFormatError
from .matrix import Matrix, dense_matrix


def read_matrix_csv(path, header: bool = True) -> tuple[list[str] | None, Matrix]:
    """Read a CSV file into (column names, matrix).

    ``header=False`` treats the first row as data and returns ``None`` for
    the names.
    """
    with open(path, "r", newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        rows = list(reader)
    rows = [r for r in rows if r]  # ignore blank trailing lines
    if not rows:
        raise CsvFormatError(f"{path}: empty file", row=1, col=1)

    names: list[str] | None = None
    first_data_row = 1
    if header:
        names = [cell.strip() for cell in rows[0]]
        rows = rows[1:]
        first_data_row = 2
        if not rows:
            raise CsvFormatError(f"{path}: header but no data rows", row=2, col=1)

    width = len(rows[0])
    data = np.empty((len(rows), width), dtype=np.float64, order="F")
    for i, row in enumerate(rows):
        file_row = first_data_row + i
        if len(row) != width:
            raise CsvFormatError(
                f"{path}: row {file_row} has {len(row)} fields, expected {width}",
                row=file_row,
                col=len(row) + 1,
            )
        for j, cell in enumerate(row):
            try:
                value = float(cell)
            except ValueError:
                value = math.nan
            if not math.isfinite(value):
                raise CsvFormatError(
                    f"{path}: row {file_row}, column {j + 1}: "
                    f"cannot parse {cell.strip()!r} as a finite number",
                    row=file_row,
                    col=j + 1,
                )
            data[i, j] = value
    if names is not None and len(names) != width:
        raise CsvFormatError(
            f"{path}: header has {len(names)} fields, data rows have {width}",
            row=1,
            col=min(len(names), width) + 1,
        )
    return names, dense_matrix(data)


def format_value(x: float) -> str:
    """Shortest decimal string that round-trips to the same float64."""
    return repr(float(x))


def write_matrix_csv(fh: IO[str], X: Matrix, header: Sequence[str] | None = None) -> None:
    """Write a matrix as CSV with shortest round-trip number formatting."""
    writer = csv.writer(fh, lineterminator="\n")
    if header is not None:
        writer.writerow(list(header))
    for i in range(X.shape[0]):
        writer.writerow([format_value(X[i, j]) for j in range(X.shape[1])])
