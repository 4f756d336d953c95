"""Pairwise interaction statistics for locus pairs, with permutation testing.

For loci ``g_i``, ``g_j`` and a quantitative phenotype, the model is

    pheno ~ intercept + g_i + g_j + g_i*g_j

The intercept is absorbed by mean-centering every variable; the centered
columns ``(g_i | g_j | I | pheno)`` are then orthogonalized in order, without
normalization.  The interaction coefficient and its t-statistic fall out of
the basis directly:

    beta3 = <q_I, pheno> / <q_I, I>
    T     = beta3 * sqrt((m - 4) * <q_I, I> / <q_ph, pheno>)

where ``<q_ph, pheno>`` is the residual sum of squares of the phenotype on
the three predictors.  Because the closed form applies to the raw (centered)
phenotype — no residualization of the response is needed — permutation
testing only has to redo four inner products per draw, reusing one
orthogonal basis per locus pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionError, InsufficientSamplesError, RankDeficientError
from .matrix import Matrix, Vector
from .orthogonal import _orthogonalize_columns


@dataclass(frozen=True)
class PairStat:
    """Interaction statistic for one locus pair (0-based indices).

    ``beta3``/``tstat`` are ``None`` when the pair was skipped as rank
    deficient (``skip_reason`` says why).  ``p_perm`` is filled only when a
    permutation test was run.
    """

    i: int
    j: int
    beta3: float | None
    tstat: float | None
    dof: int
    p_perm: float | None = None
    skip_reason: str | None = None


class _PairContext:
    """Shared per-pair state: centered data and the 3-column basis."""

    def __init__(self, g_i: Vector, g_j: Vector, pheno: Vector, pivot_floor: float):
        g_i = np.asarray(g_i, dtype=np.float64)
        g_j = np.asarray(g_j, dtype=np.float64)
        pheno = np.asarray(pheno, dtype=np.float64)
        if g_i.ndim != 1 or g_j.ndim != 1 or pheno.ndim != 1:
            raise DimensionError("loci and phenotype must be 1-D vectors")
        m = g_i.shape[0]
        if g_j.shape[0] != m or pheno.shape[0] != m:
            raise DimensionError(
                f"length mismatch: loci {g_i.shape[0]}, {g_j.shape[0]}, "
                f"phenotype {pheno.shape[0]}"
            )
        if m <= 4:
            raise InsufficientSamplesError(f"need at least 5 samples, got {m}")
        self.m = m
        inter = g_i * g_j
        # mean-center everything; the intercept never appears explicitly
        cols = np.empty((m, 3), dtype=np.float64, order="F")
        cols[:, 0] = g_i - g_i.mean()
        cols[:, 1] = g_j - g_j.mean()
        cols[:, 2] = inter - inter.mean()
        self.predictors = cols
        self.pheno_c = pheno - pheno.mean()
        # rank check covers the three predictors only: a phenotype explained
        # exactly by them is legal and yields an infinite t
        self.Q, self.d = _orthogonalize_columns(cols, pivot_floor, checked=3)
        self.interaction_pivot = float(np.dot(self.Q[:, 2], cols[:, 2]))

    def stat(self, pheno_c: Vector) -> tuple[float, float]:
        """(beta3, T) for a centered phenotype against the shared basis."""
        numerators = [float(np.dot(self.Q[:, k], pheno_c)) for k in range(3)]
        beta3 = numerators[2] / self.interaction_pivot
        rss = float(np.dot(pheno_c, pheno_c)) - sum(
            numerators[k] ** 2 / self.d[k] for k in range(3)
        )
        return beta3, self._tstat(beta3, rss)

    def stat_full(self) -> tuple[float, float]:
        """(beta3, T) for the original phenotype, residualized explicitly."""
        v = self.pheno_c.copy()
        for k in range(3):
            v -= (np.dot(self.Q[:, k], v) / self.d[k]) * self.Q[:, k]
        rss = float(np.dot(v, self.pheno_c))
        beta3 = float(np.dot(self.Q[:, 2], self.pheno_c)) / self.interaction_pivot
        return beta3, self._tstat(beta3, rss)

    def _tstat(self, beta3: float, rss: float) -> float:
        if rss > 0.0:
            return beta3 * math.sqrt((self.m - 4) * self.interaction_pivot / rss)
        if beta3 == 0.0:
            return 0.0
        return math.copysign(math.inf, beta3)


def interaction_stat(
    g_i: Vector,
    g_j: Vector,
    pheno: Vector,
    pivot_floor: float = 1e-12,
    i: int = 0,
    j: int = 1,
) -> PairStat:
    """Interaction coefficient and t-statistic for one locus pair.

    Raises :class:`RankDeficientError` when the centered predictors are
    collinear (monomorphic locus, interaction confounded with a main
    effect, ...) and :class:`InsufficientSamplesError` for fewer than 5
    samples.
    """
    ctx = _PairContext(g_i, g_j, pheno, pivot_floor)
    beta3, tstat = ctx.stat_full()
    return PairStat(i=i, j=j, beta3=beta3, tstat=tstat, dof=ctx.m - 4)


def permutation_pvalue(
    g_i: Vector,
    g_j: Vector,
    pheno: Vector,
    n_perm: int,
    seed: int,
    pivot_floor: float = 1e-12,
    permutations: Sequence[np.ndarray] | None = None,
) -> float:
    """Permutation p-value for the interaction t-statistic.

    Draws ``n_perm`` uniform permutations of the phenotype from a generator
    seeded by ``seed`` (or uses ``permutations``, mainly for testing),
    recomputes ``|T|`` for each against the shared basis, and returns the
    add-one estimate ``(1 + #{|T_perm| >= |T_obs|}) / (1 + n_perm)``.
    """
    if n_perm < 1:
        raise ValueError(f"n_perm must be >= 1, got {n_perm}")
    ctx = _PairContext(g_i, g_j, pheno, pivot_floor)
    _, t_obs = ctx.stat_full()
    if permutations is None:
        rng = _rng(seed)
        perms = (rng.permutation(ctx.m) for _ in range(n_perm))
    else:
        if len(permutations) != n_perm:
            raise ValueError(f"got {len(permutations)} permutations, expected {n_perm}")
        perms = iter(permutations)
    return _pvalue(ctx, t_obs, perms, n_perm)


def _pvalue(ctx: _PairContext, t_obs: float, perms, n_perm: int) -> float:
    hits = 0
    observed = abs(t_obs)
    for idx in perms:
        _, t = ctx.stat(ctx.pheno_c[idx])
        if abs(t) >= observed:
            hits += 1
    return (1 + hits) / (1 + n_perm)


def _rng(seed: int, *extra: int) -> np.random.Generator:
    words = [s & 0xFFFFFFFFFFFFFFFF for s in (seed, *extra)]
    return np.random.default_rng(np.random.SeedSequence(words))


def pairwise_scan(
    G: Matrix,
    pheno: Vector,
    n_perm: int = 0,
    seed: int = 0,
    pivot_floor: float = 1e-12,
    threads: int = 1,
) -> list[PairStat]:
    """Interaction statistics for every locus pair ``i < j``, in order.

    Rank-deficient pairs are reported with empty statistics and a skip
    reason instead of aborting the scan.  With ``n_perm > 0`` each pair also
    gets a permutation p-value, with a per-pair generator derived from
    ``(seed, i, j)`` so results do not depend on evaluation order; the scan
    may therefore run on several threads and still return identical output.
    """
    G = np.asarray(G, dtype=np.float64)
    pheno = np.asarray(pheno, dtype=np.float64)
    if G.ndim != 2:
        raise DimensionError(f"expected a 2-D locus matrix, got shape {G.shape}")
    L = G.shape[1]
    if L < 2:
        raise DimensionError(f"need at least 2 loci, got {L}")
    pairs = [(i, j) for i in range(L) for j in range(i + 1, L)]

    def one(pair: tuple[int, int]) -> PairStat:
        i, j = pair
        try:
            ctx = _PairContext(G[:, i], G[:, j], pheno, pivot_floor)
        except RankDeficientError as err:
            return PairStat(
                i=i, j=j, beta3=None, tstat=None,
                dof=G.shape[0] - 4, skip_reason=str(err),
            )
        beta3, tstat = ctx.stat_full()
        p_perm = None
        if n_perm > 0:
            rng = _rng(seed, i, j)
            perms = (rng.permutation(ctx.m) for _ in range(n_perm))
            p_perm = _pvalue(ctx, tstat, perms, n_perm)
        return PairStat(i=i, j=j, beta3=beta3, tstat=tstat, dof=ctx.m - 4, p_perm=p_perm)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, pairs))
    return [one(pair) for pair in pairs]
