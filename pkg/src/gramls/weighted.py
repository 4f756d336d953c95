"""Weighted least squares without factoring the weight matrix.

The usual route to ``(X^T W X)^{-1} X^T W y`` pre-multiplies the data by a
square root of ``W``, which requires ``W`` to be positive definite.  Instead,
the columns of ``W X`` can be orthogonalized *against the columns of X*:

    b_1 = W x_1
    b_i = W x_i - sum_{j<i} (<b_j, x_i> / <b_j, x_j>) b_j

The resulting basis satisfies ``<b_i, x_j> = 0`` for ``j < i``, so
``B^T X`` is upper triangular with pivots ``<b_i, x_i>``, and the same
projector-chain closed forms as in the unweighted case go through with those
pivots as denominators.  ``W`` only has to be symmetric and nonsingular; an
indefinite ``W`` merely makes some pivots negative.

The updates run in the sequential-subtraction order ``b <- b -
(<b, x_j> / pivot_j) * q_j``: in exact arithmetic the coefficient
``<b, x_j>`` equals the textbook ``<q_j, x_i>`` (the working vector differs
from ``W x_i`` only by earlier basis vectors, each orthogonal to ``x_j``),
and driving the current product to zero directly keeps the triangularity
tight in floating point.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NotSymmetricError, RankDeficientError
from .matrix import Matrix, Vector
from .pseudoinverse import PseudoInverse

_SYMMETRY_RTOL = 1e-10


@dataclass(frozen=True)
class WeightedBasis:
    """Basis of ``W X`` orthogonalized against the columns of ``X``.

    ``pivots[i] = <basis_i, x_i>`` may be negative for indefinite ``W``;
    only a vanishing pivot is fatal.
    """

    basis: Matrix
    pivots: Vector

    @property
    def p(self) -> int:
        return self.basis.shape[1]


def diagonal_weights(w: Vector) -> Matrix:
    """Dense diagonal weight matrix from a vector of per-row weights."""
    w = np.asarray(w, dtype=np.float64)
    if w.ndim != 1:
        raise DimensionError(f"expected a 1-D weight vector, got shape {w.shape}")
    return np.diag(w)


def _check_weights(W: Matrix, n: int) -> Matrix:
    W = np.asarray(W, dtype=np.float64)
    if W.ndim != 2 or W.shape[0] != W.shape[1]:
        raise DimensionError(f"weight matrix must be square, got shape {W.shape}")
    if W.shape[0] != n:
        raise DimensionError(f"weight matrix is {W.shape[0]}x{W.shape[0]}, data has {n} rows")
    skew = np.max(np.abs(W - W.T))
    if skew > _SYMMETRY_RTOL * max(np.max(np.abs(W)), 1.0):
        raise NotSymmetricError(
            f"weight matrix asymmetry {skew:.6g} exceeds tolerance"
        )
    return W


def weighted_sgso(X: Matrix, W: Matrix, pivot_floor: float = 1e-12) -> WeightedBasis:
    """Orthogonalize ``W X`` against the columns of ``X``.

    With ``W = I`` this reduces to the plain non-normalized Gram-Schmidt
    basis.  Raises :class:`NotSymmetricError` for asymmetric ``W`` and
    :class:`RankDeficientError` when a pivot magnitude collapses, which
    signals a singular ``X^T W X``.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {X.shape}")
    n, p = X.shape
    if p < 1 or n < p:
        raise DimensionError(f"need rows >= cols >= 1, got {n}x{p}")
    W = _check_weights(W, n)
    B = np.asfortranarray(W @ X)
    pivots = np.empty(p, dtype=np.float64)
    scale = 1.0
    for i in range(p):
        v = B[:, i].copy()
        for j in range(i):
            v -= (np.dot(v, X[:, j]) / pivots[j]) * B[:, j]
        pivots[i] = np.dot(v, X[:, i])
        if abs(pivots[i]) <= pivot_floor * scale:
            raise RankDeficientError(i, pivots[i], pivot_floor * scale)
        scale = max(scale, abs(pivots[i]))
        B[:, i] = v
    B.flags.writeable = False
    pivots.flags.writeable = False
    return WeightedBasis(basis=B, pivots=pivots)


def weighted_coeffs(X: Matrix, y: Vector, B: WeightedBasis) -> Vector:
    """All weighted coefficients via the projector chain with weighted pivots.

    Evaluated back to front with one shared working vector: coefficient
    ``i`` is read off as ``<b_i, z> / pivot_i`` and its column is then
    removed from ``z``, which is exactly the right-to-left product of the
    rank-one projectors.  The result solves ``(X^T W X) beta = X^T W y``.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if B.basis.shape != X.shape:
        raise DimensionError(
            f"basis shape {B.basis.shape} does not match matrix shape {X.shape}"
        )
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionError(f"response length {y.shape} does not match {X.shape[0]} rows")
    p = B.p
    beta = np.empty(p, dtype=np.float64)
    z = np.array(y, dtype=np.float64)
    for i in range(p - 1, -1, -1):
        beta[i] = np.dot(B.basis[:, i], z) / B.pivots[i]
        z -= beta[i] * X[:, i]
    return beta


def weighted_geninv(
    X: Matrix, W: Matrix, pivot_floor: float = 1e-12
) -> PseudoInverse:
    """Left generalized inverse ``(X^T W X)^{-1} X^T W`` by an in-place sweep.

    Starting from ``B = W X``, each step forward-orthogonalizes the trailing
    columns against the newest finished one and back-orthogonalizes the
    finished columns against the new pivot column, leaving
    ``<b_i, x_j> = pivot_i * delta_ij``; the rows of ``diag(1/pivots) B^T``
    are then biorthogonal to the columns of ``X``.
    """
    X = np.asarray(X, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {X.shape}")
    n, p = X.shape
    if p < 1 or n < p:
        raise DimensionError(f"need rows >= cols >= 1, got {n}x{p}")
    W = _check_weights(W, n)
    B = np.asfortranarray(W @ X)
    d = np.empty(p, dtype=np.float64)
    d[0] = np.dot(B[:, 0], X[:, 0])
    if abs(d[0]) <= pivot_floor:
        raise RankDeficientError(0, d[0], pivot_floor)
    scale = max(1.0, abs(d[0]))
    for i in range(1, p):
        for j in range(i, p):
            B[:, j] -= (np.dot(B[:, i - 1], X[:, j]) / d[i - 1]) * B[:, i - 1]
        d[i] = np.dot(B[:, i], X[:, i])
        if abs(d[i]) <= pivot_floor * scale:
            raise RankDeficientError(i, d[i], pivot_floor * scale)
        scale = max(scale, abs(d[i]))
        for j in range(i):
            B[:, j] -= (np.dot(X[:, i], B[:, j]) / d[i]) * B[:, i]
    rows = np.ascontiguousarray(B.T / d[:, np.newaxis])
    rows.flags.writeable = False
    return PseudoInverse(rows=rows, source_shape=(n, p))
