"""Shared test utilities: controlled random instances and comparisons."""

from __future__ import annotations

import numpy as np


def make_instance(rng, n, p, cond_gram=None, noise=0.0, scale=1.0):
    """Random (X, y) with a controlled Gram-matrix condition number.

    ``X`` is built from orthonormal factors and a geometric singular-value
    ramp, so cond(X^T X) == cond_gram up to rounding.  ``y`` is X times
    coefficients drawn away from zero (|b| in [0.5, 2]) plus optional noise;
    with noise=0 the true coefficients are recovered exactly, which keeps
    per-coefficient relative comparisons meaningful.
    """
    A = rng.standard_normal((n, p))
    if cond_gram is None:
        X = A
    else:
        Qn, _ = np.linalg.qr(A)
        Qp, _ = np.linalg.qr(rng.standard_normal((p, p)))
        svals = np.geomspace(1.0, 1.0 / np.sqrt(cond_gram), p)
        X = Qn @ (svals[:, None] * Qp.T)
    X = np.asfortranarray(X * scale)
    beta = rng.uniform(0.5, 2.0, p) * rng.choice([-1.0, 1.0], p)
    y = X @ beta + (noise * rng.standard_normal(n) if noise else 0.0)
    return X, y


def max_rel(a, b, floor=1e-30):
    """Normwise max relative difference: max|a-b| / max(max|b|, floor)."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return float(np.max(np.abs(a - b))) / max(float(np.max(np.abs(b))), floor)


def coeff_rel(a, b):
    """Per-coefficient relative differences |a_i - b_i| / |b_i|."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return np.abs(a - b) / np.abs(b)
