"""Upper-triangular factorization of the Gram matrix, built from inner products.

For a matrix ``X`` with nonsingular Gram matrix ``X^T X``, elimination without
any pivoting produces an upper factor ``U`` whose rows obey

    u_1j = <x_1, x_j>
    u_ij = <x_i, x_j> - sum_{k<i} u_ki * u_kj / u_kk      (j >= i)

Entries below the diagonal vanish identically (``U`` equals ``Q^T X`` for the
non-normalized orthogonal basis ``Q`` of :mod:`gramls.orthogonal`, and
``<q_i, x_j> = 0`` for ``j < i``), so they are never computed.  The diagonal
``u_ii`` equals the squared norms ``<q_i, q_i>``: all pivots of a nonsingular
Gram matrix are positive, which is why no pivoting is needed.

A response vector ``y`` can ride along as one extra column, giving the
products ``u_{i,y}``; together with ``U`` these contain everything a
least-squares solve needs.  The augmented path runs the exact same scalar
arithmetic as factoring the concatenated matrix ``(X|y)``, so the two agree
bit-for-bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, RankDeficientError
from .matrix import Matrix, Vector


@dataclass(frozen=True)
class UpperFactor:
    """Upper factor of a Gram matrix, optionally with a response column.

    ``upper`` is p-by-p with zeros below the diagonal and strictly positive
    diagonal.  ``response_col``, when present, holds the eliminated products
    of each column with the response.
    """

    upper: Matrix
    response_col: Vector | None = None

    @property
    def p(self) -> int:
        return self.upper.shape[0]


def _upper_rows(M: Matrix, n_rows: int, checked: int, pivot_floor: float) -> Matrix:
    """First ``n_rows`` rows of the upper factor of ``M``'s Gram matrix.

    Plain ascending accumulation, one scalar term at a time; every caller
    shares this arithmetic path, which makes augmented and concatenated
    factorizations bit-identical.
    """
    m = M.shape[1]
    U = np.zeros((n_rows, m), dtype=np.float64)
    scale = 1.0
    for i in range(n_rows):
        for j in range(i, m):
            acc = np.dot(M[:, i], M[:, j])
            for k in range(i):
                acc -= U[k, i] * U[k, j] / U[k, k]
            U[i, j] = acc
        if i < checked and U[i, i] <= pivot_floor * scale:
            raise RankDeficientError(i, U[i, i], pivot_floor * scale)
        scale = max(scale, U[i, i])
    return U


def lu_upper(X: Matrix, pivot_floor: float = 1e-12) -> UpperFactor:
    """Upper factor of ``X^T X`` directly from column inner products."""
    X = np.asarray(X, dtype=np.float64)
    n, p = X.shape
    if n < p:
        raise DimensionError(f"need rows >= cols, got {n}x{p}")
    U = _upper_rows(X, n_rows=p, checked=p, pivot_floor=pivot_floor)
    U.flags.writeable = False
    return UpperFactor(upper=U)


def lu_upper_augmented(
    X: Matrix, y: Vector, pivot_floor: float = 1e-12
) -> UpperFactor:
    """Upper factor of ``X^T X`` plus the eliminated response products.

    Identical to factoring the concatenated matrix ``(X|y)`` and keeping the
    first p rows, but the response column is exempt from the rank check: a
    response lying exactly in the span of ``X`` is legal.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    n, p = X.shape
    if y.ndim != 1 or y.shape[0] != n:
        raise DimensionError(f"response length {y.shape} does not match {n} rows")
    if n < p:
        raise DimensionError(f"need rows >= cols, got {n}x{p}")
    M = np.empty((n, p + 1), dtype=np.float64, order="F")
    M[:, :p] = X
    M[:, p] = y
    W = _upper_rows(M, n_rows=p, checked=p, pivot_floor=pivot_floor)
    U = W[:, :p].copy()
    uy = W[:, p].copy()
    U.flags.writeable = False
    uy.flags.writeable = False
    return UpperFactor(upper=U, response_col=uy)


def scaled_rows(F: UpperFactor) -> Matrix:
    """Rows of the factor divided by their pivots (unit diagonal).

    When a response column is present it is scaled and appended, so the
    result is p-by-(p+1); its entries are exactly the ratios consumed by the
    coefficient back-recursion.
    """
    U = F.upper
    p = F.p
    diag = np.diag(U)
    width = p + (1 if F.response_col is not None else 0)
    C = np.zeros((p, width), dtype=np.float64)
    C[:, :p] = U / diag[:, np.newaxis]
    if F.response_col is not None:
        C[:, p] = F.response_col / diag
    return C
