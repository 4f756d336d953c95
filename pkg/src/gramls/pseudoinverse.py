"""Left generalized inverse and precision-matrix elements, row by row.

Row ``i`` of the left inverse ``(X^T X)^{-1} X^T`` comes straight from the
orthogonal basis by the same projector chain used for single coefficients,
applied to a row vector:

    row_i = (q_i / d_i)^T [I - x_{i+1} (q_{i+1}/d_{i+1})^T] ...
                          [I - x_p (q_p/d_p)^T]

Each row is biorthogonal to the columns of ``X`` (``row_i . x_j`` is 1 when
``i == j``, else 0).  Elements of the precision matrix ``(X^T X)^{-1}`` are
just inner products of these rows, so a single element costs two rows,
without assembling the whole inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matrix import Matrix, Vector
from .orthogonal import SgsoBasis, sgso
from .solve import _check_basis


@dataclass(frozen=True)
class PseudoInverse:
    """Rows of the left generalized inverse; ``rows`` is p-by-n."""

    rows: Matrix
    source_shape: tuple[int, int]

    @property
    def p(self) -> int:
        return self.rows.shape[0]


def pseudo_row(i: int, X: Matrix, B: SgsoBasis) -> Vector:
    """Row ``i`` (0-based) of the left generalized inverse of ``X``."""
    X = np.asarray(X, dtype=np.float64)
    _check_basis(i, X, B)
    Q, d = B.basis, B.norms_sq
    r = Q[:, i] / d[i]
    for k in range(i + 1, B.p):
        r = r - (np.dot(r, X[:, k]) / d[k]) * Q[:, k]
    return r


def generalized_inverse(X: Matrix, pivot_floor: float = 1e-12) -> PseudoInverse:
    """Left generalized inverse ``(X^T X)^{-1} X^T`` of a full-rank matrix."""
    X = np.asarray(X, dtype=np.float64)
    B = sgso(X, pivot_floor=pivot_floor)
    n, p = X.shape
    rows = np.empty((p, n), dtype=np.float64)
    for i in range(p):
        rows[i, :] = pseudo_row(i, X, B)
    rows.flags.writeable = False
    return PseudoInverse(rows=rows, source_shape=(n, p))


def precision_element(
    i: int,
    j: int,
    source: PseudoInverse | Matrix,
    basis: SgsoBasis | None = None,
    pivot_floor: float = 1e-12,
) -> float:
    """Element ``(i, j)`` of ``(X^T X)^{-1}`` (0-based, symmetric).

    ``source`` may be a precomputed :class:`PseudoInverse`, or the matrix
    ``X`` itself, in which case only the two needed inverse rows are formed.
    The element is computed once in canonical order, so the two index orders
    return identical bits.
    """
    lo, hi = (i, j) if i <= j else (j, i)
    if isinstance(source, PseudoInverse):
        p = source.p
        if not (0 <= lo and hi < p):
            raise IndexError(f"indices ({i}, {j}) out of range for p={p}")
        return float(np.dot(source.rows[lo], source.rows[hi]))
    X = np.asarray(source, dtype=np.float64)
    if basis is None:
        basis = sgso(X, pivot_floor=pivot_floor)
    row_lo = pseudo_row(lo, X, basis)
    row_hi = row_lo if hi == lo else pseudo_row(hi, X, basis)
    return float(np.dot(row_lo, row_hi))


def precision_matrix(P: PseudoInverse) -> Matrix:
    """Full ``(X^T X)^{-1}``: upper triangle computed, mirrored bit-exactly."""
    p = P.p
    S = np.empty((p, p), dtype=np.float64)
    for i in range(p):
        for j in range(i, p):
            S[i, j] = np.dot(P.rows[i], P.rows[j])
            S[j, i] = S[i, j]
    return S
