"""Dense vector/matrix construction and Gram-matrix primitives.

Vectors and matrices are plain ``numpy`` float64 arrays.  Matrices are kept
column-major so that column extraction, the dominant access pattern of the
orthogonalization routines, is contiguous.  The constructors below are the
single validation point for external data: anything read from a file goes
through :func:`dense_vector` / :func:`dense_matrix`, which reject non-finite
entries with their coordinates; internally computed arrays are used as-is.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError

Vector = np.ndarray
Matrix = np.ndarray


def dense_vector(data) -> Vector:
    """Validate and return a 1-D float64 vector of positive length."""
    v = np.asarray(data, dtype=np.float64)
    if v.ndim != 1:
        raise DimensionError(f"expected a 1-D vector, got shape {v.shape}")
    if v.size == 0:
        raise DimensionError("vector must have positive length")
    if not np.all(np.isfinite(v)):
        k = int(np.flatnonzero(~np.isfinite(v))[0])
        raise ValueError(f"non-finite value at position {k + 1}")
    return v


def dense_matrix(data) -> Matrix:
    """Validate and return a 2-D float64 column-major matrix."""
    m = np.asarray(data, dtype=np.float64)
    if m.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {m.shape}")
    if m.shape[0] == 0 or m.shape[1] == 0:
        raise DimensionError("matrix must have positive dimensions")
    if not np.all(np.isfinite(m)):
        r, c = np.argwhere(~np.isfinite(m))[0]
        raise ValueError(f"non-finite value at row {int(r) + 1}, column {int(c) + 1}")
    return np.asfortranarray(m)


def dot(u: Vector, v: Vector) -> float:
    """Inner product of two equal-length vectors.

    Accumulation is double precision and deterministic for a fixed process,
    so repeated evaluations (and both argument orders) give identical bits.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.ndim != 1 or v.ndim != 1 or u.shape[0] != v.shape[0]:
        raise DimensionError(f"dot of incompatible lengths {u.shape} and {v.shape}")
    return float(np.dot(u, v))


def gram(X: Matrix) -> Matrix:
    """Matrix of pairwise column inner products.

    The upper triangle is computed and mirrored, so the result is symmetric
    bit-for-bit.
    """
    X = np.asarray(X, dtype=np.float64)
    p = X.shape[1]
    G = np.empty((p, p), dtype=np.float64)
    for i in range(p):
        for j in range(i, p):
            G[i, j] = np.dot(X[:, i], X[:, j])
            G[j, i] = G[i, j]
    return G


def augmented_gram(X: Matrix, y: Vector) -> Matrix:
    """Gram matrix of ``X`` with the column of products against ``y`` appended.

    The left block is exactly :func:`gram` of ``X``; the extra column holds
    the inner products of each column of ``X`` with ``y``.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1 or y.shape[0] != X.shape[0]:
        raise DimensionError(
            f"response length {y.shape} does not match {X.shape[0]} rows"
        )
    p = X.shape[1]
    out = np.empty((p, p + 1), dtype=np.float64)
    out[:, :p] = gram(X)
    for i in range(p):
        out[i, p] = np.dot(X[:, i], y)
    return out


def prepend_ones(X: Matrix) -> Matrix:
    """Return ``X`` with a leading all-ones column (intercept column)."""
    X = np.asarray(X, dtype=np.float64)
    out = np.empty((X.shape[0], X.shape[1] + 1), dtype=np.float64, order="F")
    out[:, 0] = 1.0
    out[:, 1:] = X
    return out
