"""Least-squares coefficients in closed form, whole vector or one at a time.

Two routes to the same numbers:

* :func:`solve_all` back-recurses over the augmented upper factor.  With the
  unit-scaled rows ``c_ij = u_ij / u_ii`` the recursion is simply
  ``beta_i = c_{i,y} - sum_{j>i} beta_j * c_ij``.

* :func:`coeff_single` evaluates one coefficient straight from the
  orthogonal basis, without the factor and without the other coefficients:

      beta_i = (q_i / d_i)^T [I - x_{i+1} (q_{i+1}/d_{i+1})^T] ...
                             [I - x_p (q_p/d_p)^T] y

  The rank-one projectors are applied right-to-left as O(n) vector updates
  (``z <- z - x_k * (<q_k, z> / d_k)``), never materialized.  Because the
  chain acts on ``y`` directly, replacing ``y`` by its residual on the
  leading columns changes nothing; permuted responses can therefore be
  swept through a single shared basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, InsufficientRowsError
from .factor import UpperFactor, lu_upper_augmented
from .matrix import Matrix, Vector, dot, prepend_ones
from .orthogonal import SgsoBasis


@dataclass(frozen=True)
class FitResult:
    """Coefficients, residuals, residual sum of squares, and ``n - p``."""

    beta: Vector
    residuals: Vector
    rss: float
    dof: int


def solve_all(F: UpperFactor) -> Vector:
    """All coefficients by back-recursion over an augmented factor."""
    if F.response_col is None:
        raise ValueError("factor has no response column; use lu_upper_augmented")
    U = F.upper
    uy = F.response_col
    p = F.p
    beta = np.empty(p, dtype=np.float64)
    for i in range(p - 1, -1, -1):
        acc = uy[i] / U[i, i]
        for j in range(i + 1, p):
            acc -= beta[j] * U[i, j] / U[i, i]
        beta[i] = acc
    return beta


def _chain_coeff(i: int, X: Matrix, Q: Matrix, d: Vector, y: Vector) -> float:
    """Apply the projector chain for coefficient ``i`` to one response."""
    z = np.array(y, dtype=np.float64)
    for k in range(Q.shape[1] - 1, i, -1):
        z -= (np.dot(Q[:, k], z) / d[k]) * X[:, k]
    return float(np.dot(Q[:, i], z) / d[i])


def _check_basis(i: int, X: Matrix, B: SgsoBasis) -> None:
    if B.basis.shape != X.shape:
        raise DimensionError(
            f"basis shape {B.basis.shape} does not match matrix shape {X.shape}"
        )
    if not 0 <= i < B.p:
        raise IndexError(f"coefficient index {i} out of range for p={B.p}")


def coeff_single(i: int, X: Matrix, y: Vector, B: SgsoBasis) -> float:
    """Coefficient ``i`` (0-based) alone, from the orthogonal basis of ``X``.

    Needs only the basis, the trailing columns of ``X``, and ``y``; no
    factor, no other coefficients, no residualization of ``y``.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    _check_basis(i, X, B)
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionError(f"response length {y.shape} does not match {X.shape[0]} rows")
    return _chain_coeff(i, X, B.basis, B.norms_sq, y)


def coeff_under_y_permutations(i: int, X: Matrix, Y: Matrix, B: SgsoBasis) -> Vector:
    """Coefficient ``i`` for every response column of ``Y``, one shared basis.

    Column ``k`` of the result is exactly ``coeff_single(i, X, Y[:, k], B)``
    (same arithmetic path); the basis is computed once by the caller and the
    chain is swept over the columns.
    """
    X = np.asarray(X, dtype=np.float64)
    Y = np.asarray(Y, dtype=np.float64)
    _check_basis(i, X, B)
    if Y.ndim != 2 or Y.shape[0] != X.shape[0]:
        raise DimensionError(f"response block {Y.shape} does not match {X.shape[0]} rows")
    out = np.empty(Y.shape[1], dtype=np.float64)
    for k in range(Y.shape[1]):
        out[k] = _chain_coeff(i, X, B.basis, B.norms_sq, Y[:, k])
    return out


def fit(
    X: Matrix,
    y: Vector,
    intercept: bool = False,
    pivot_floor: float = 1e-12,
) -> FitResult:
    """Fit ``y`` on the columns of ``X``, optionally with an intercept.

    The intercept is a prepended all-ones column, so the returned ``beta``
    starts with it when requested.  Raises
    :class:`~gramls.errors.InsufficientRowsError` when no residual degrees
    of freedom remain, and propagates rank failures from the factorization.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {X.shape}")
    design = prepend_ones(X) if intercept else X
    n, p = design.shape
    if y.ndim != 1 or y.shape[0] != n:
        raise DimensionError(f"response length {y.shape} does not match {n} rows")
    dof = n - p
    if dof <= 0:
        raise InsufficientRowsError(
            f"{n} rows leave no degrees of freedom for {p} coefficients"
        )
    F = lu_upper_augmented(design, y, pivot_floor=pivot_floor)
    beta = solve_all(F)
    residuals = y - design @ beta
    rss = dot(residuals, residuals)
    return FitResult(beta=beta, residuals=residuals, rss=rss, dof=dof)
