"""Brute-force reference solvers used for cross-checking.

These deliberately take a different algorithmic route from the main modules:
Gaussian elimination WITH partial pivoting on explicitly formed normal
equations, and a literal transcription of the four-variable closed forms via
a two-step projector.  They share nothing with the orthogonalization-based
solvers beyond the inner-product primitives, so agreement between the two
routes is evidence rather than tautology.  Performance is a non-goal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, SingularSystemError
from .matrix import Matrix, Vector, dot, gram

_PIVOT_RTOL = 1e-13


@dataclass(frozen=True)
class OracleSolution:
    beta: Vector
    method_tag: str


def _eliminate(A: Matrix, B: Matrix) -> tuple[Matrix, Matrix]:
    """Forward elimination with partial pivoting on ``[A | B]`` (copies)."""
    A = np.array(A, dtype=np.float64)
    B = np.array(B, dtype=np.float64)
    n = A.shape[0]
    scale = np.max(np.abs(A)) if A.size else 0.0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(A[k:, k])))
        if abs(A[piv, k]) <= _PIVOT_RTOL * scale:
            raise SingularSystemError(
                f"pivot {A[piv, k]:.6g} in column {k} below tolerance"
            )
        if piv != k:
            A[[k, piv], :] = A[[piv, k], :]
            B[[k, piv], :] = B[[piv, k], :]
        factors = A[k + 1 :, k] / A[k, k]
        A[k + 1 :, k:] -= np.outer(factors, A[k, k:])
        B[k + 1 :, :] -= np.outer(factors, B[k, :])
    return A, B


def _back_substitute(A: Matrix, B: Matrix) -> Matrix:
    n = A.shape[0]
    X = np.zeros_like(B)
    for i in range(n - 1, -1, -1):
        X[i, :] = (B[i, :] - A[i, i + 1 :] @ X[i + 1 :, :]) / A[i, i]
    return X


def gauss_solve_normal_equations(X: Matrix, y: Vector) -> OracleSolution:
    """Solve the normal equations by pivoted Gaussian elimination.

    Forms the Gram matrix and right-hand side explicitly, then eliminates
    with row swaps.  Completely independent of the factorization modules.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionError(f"response length {y.shape} does not match {X.shape[0]} rows")
    A = gram(X)
    b = np.array([dot(X[:, i], y) for i in range(X.shape[1])], dtype=np.float64)
    Ae, be = _eliminate(A, b[:, np.newaxis])
    beta = _back_substitute(Ae, be)[:, 0]
    return OracleSolution(beta=beta, method_tag="gauss-normal-eq")


def gauss_inverse(A: Matrix) -> Matrix:
    """Matrix inverse by pivoted elimination on ``[A | I]``."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"need a square matrix, got shape {A.shape}")
    n = A.shape[0]
    Ae, Be = _eliminate(A, np.eye(n))
    return _back_substitute(Ae, Be)


def closed_form_p4(X: Matrix, y: Vector) -> tuple[float, float]:
    """Third and fourth coefficients of a 4-column regression, closed form.

    Projects out the first two columns with an explicit two-term projector
    (applied as vector actions, never materialized as an n-by-n matrix) and
    evaluates the resulting 2x2 elimination ratios for the last two
    coefficients.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if X.ndim != 2 or X.shape[1] != 4:
        raise DimensionError(f"need exactly 4 columns, got shape {X.shape}")
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionError(f"response length {y.shape} does not match {X.shape[0]} rows")
    x1, x2, x3, x4 = (X[:, k] for k in range(4))

    norms = [dot(X[:, k], X[:, k]) for k in range(4)]
    scale = max(norms)
    d1 = dot(x1, x1)
    if d1 <= _PIVOT_RTOL * scale:
        raise SingularSystemError("first column has (near) zero norm")
    x2t = x2 - (dot(x1, x2) / d1) * x1
    d2 = dot(x2, x2) - dot(x1, x2) ** 2 / d1
    if d2 <= _PIVOT_RTOL * scale:
        raise SingularSystemError("second column is (nearly) collinear with the first")

    def project(v: Vector) -> Vector:
        return v - (dot(x1, v) / d1) * x1 - (dot(x2t, v) / d2) * x2t

    p3, p4, py = project(x3), project(x4), project(y)
    a33 = dot(x3, p3)
    a34 = dot(x3, p4)
    a44 = dot(x4, p4)
    a3y = dot(x3, py)
    a4y = dot(x4, py)
    den = a33 * a44 - a34 * a34
    if abs(den) <= _PIVOT_RTOL * max(abs(a33 * a44), a34 * a34, 1.0):
        raise SingularSystemError("last two columns are (nearly) collinear")
    beta3 = (a44 * a3y - a34 * a4y) / den
    beta4 = (a33 * a4y - a34 * a3y) / den
    return beta3, beta4
