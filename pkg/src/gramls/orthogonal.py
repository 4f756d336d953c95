"""Column orthogonalization without normalization.

Classic Gram-Schmidt rescales every basis vector to unit length; here the
vectors are only orthogonalized, never normalized, so no square roots are
taken anywhere.  The price is that the basis carries its squared norms
``d[i] = <q_i, q_i>`` alongside the columns, and consumers divide by those
instead.  The payoff is a set of exact closed forms: the diagonal ``d``
doubles as the pivots of the Gram-matrix factorization, and the scaled basis
``q_i / d[i]`` is dual to the original columns.

The updates run in modified (sequential-subtraction) order: each projection
is removed from the working vector before the next coefficient is computed.
In exact arithmetic this is identical to computing all coefficients from the
original column, but it keeps the basis orthogonal to much tighter floating
point tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, RankDeficientError
from .matrix import Matrix, Vector


def _orthogonalize_columns(
    M: Matrix, pivot_floor: float, checked: int
) -> tuple[Matrix, Vector]:
    """Orthogonalize the columns of ``M`` in order, without normalization.

    Returns the basis ``Q`` and squared norms ``d``.  The rank check
    ``d[i] <= pivot_floor * max(1, d[0..i-1])`` is applied to the first
    ``checked`` columns only; callers that append a response column as the
    final "variable" exempt it, since a perfectly explained response has a
    legitimately vanishing residual.
    """
    n, m = M.shape
    Q = np.empty((n, m), dtype=np.float64, order="F")
    d = np.empty(m, dtype=np.float64)
    scale = 1.0
    for i in range(m):
        v = M[:, i].copy()
        for j in range(i):
            c = np.dot(Q[:, j], v) / d[j]
            v -= c * Q[:, j]
        d[i] = np.dot(v, v)
        if i < checked and d[i] <= pivot_floor * scale:
            raise RankDeficientError(i, d[i], pivot_floor * scale)
        scale = max(scale, d[i])
        Q[:, i] = v
    return Q, d


@dataclass(frozen=True)
class SgsoBasis:
    """Orthogonal (non-normalized) basis of a matrix's columns.

    ``basis`` holds the columns ``q_1..q_p``; ``norms_sq[i]`` is
    ``<q_i, q_i>``, strictly positive by construction.  The first basis
    column equals the first input column bit-for-bit.
    """

    basis: Matrix
    norms_sq: Vector
    pivot_floor: float

    @property
    def p(self) -> int:
        return self.basis.shape[1]


def sgso(X: Matrix, pivot_floor: float = 1e-12) -> SgsoBasis:
    """Orthogonalize the columns of ``X`` in their given order.

    ``q_1 = x_1`` and each later ``q_i`` is ``x_i`` minus its projections on
    the previous basis vectors, with coefficients ``<q_j, .> / <q_j, q_j>``.
    Column order is meaningful (every downstream closed form is indexed by
    it), so no pivoting or reordering is performed.

    Raises :class:`RankDeficientError` if a squared norm falls to
    ``pivot_floor`` relative to the largest one seen so far, which signals a
    numerically singular Gram matrix.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {X.shape}")
    n, p = X.shape
    if p < 1 or n < p:
        raise DimensionError(f"need rows >= cols >= 1, got {n}x{p}")
    if pivot_floor < 0:
        raise ValueError("pivot_floor must be nonnegative")
    Q, d = _orthogonalize_columns(X, pivot_floor, checked=p)
    Q.flags.writeable = False
    d.flags.writeable = False
    return SgsoBasis(basis=Q, norms_sq=d, pivot_floor=pivot_floor)


def scaled_basis(B: SgsoBasis) -> Matrix:
    """Columns ``q_i / <q_i, q_i>``, the dual basis with ``Q_scaled^T Q = I``."""
    return B.basis / B.norms_sq[np.newaxis, :]
