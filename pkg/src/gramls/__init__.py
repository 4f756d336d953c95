"""Closed-form least squares from a square-root-free Gram-Schmidt basis.

The package solves ordinary and weighted least squares without inverting the
Gram matrix and without normalizing the orthogonal basis: the upper factor of
``X^T X`` and the non-normalized Gram-Schmidt basis are two views of the same
object, and every quantity of interest (all coefficients, one coefficient,
rows of the left generalized inverse, single precision-matrix elements,
weighted coefficients, interaction statistics) has a closed form in it.
"""

from .epistasis import PairStat, interaction_stat, pairwise_scan, permutation_pvalue
from .errors import (
    CsvFormatError,
    DimensionError,
    InsufficientRowsError,
    InsufficientSamplesError,
    NotSymmetricError,
    RankDeficientError,
    SingularSystemError,
)
from .factor import UpperFactor, lu_upper, lu_upper_augmented, scaled_rows
from .io import read_matrix_csv, write_matrix_csv
from .matrix import (
    augmented_gram,
    dense_matrix,
    dense_vector,
    dot,
    gram,
    prepend_ones,
)
from .oracle import (
    OracleSolution,
    closed_form_p4,
    gauss_inverse,
    gauss_solve_normal_equations,
)
from .orthogonal import SgsoBasis, scaled_basis, sgso
from .pseudoinverse import (
    PseudoInverse,
    generalized_inverse,
    precision_element,
    precision_matrix,
    pseudo_row,
)
from .solve import FitResult, coeff_single, coeff_under_y_permutations, fit, solve_all
from .weighted import (
    WeightedBasis,
    diagonal_weights,
    weighted_coeffs,
    weighted_geninv,
    weighted_sgso,
)

__all__ = [
    "CsvFormatError",
    "DimensionError",
    "FitResult",
    "InsufficientRowsError",
    "InsufficientSamplesError",
    "NotSymmetricError",
    "OracleSolution",
    "PairStat",
    "PseudoInverse",
    "RankDeficientError",
    "SgsoBasis",
    "SingularSystemError",
    "UpperFactor",
    "WeightedBasis",
    "augmented_gram",
    "closed_form_p4",
    "coeff_single",
    "coeff_under_y_permutations",
    "dense_matrix",
    "dense_vector",
    "diagonal_weights",
    "dot",
    "fit",
    "gauss_inverse",
    "gauss_solve_normal_equations",
    "generalized_inverse",
    "gram",
    "interaction_stat",
    "lu_upper",
    "lu_upper_augmented",
    "pairwise_scan",
    "permutation_pvalue",
    "precision_element",
    "precision_matrix",
    "prepend_ones",
    "pseudo_row",
    "read_matrix_csv",
    "scaled_basis",
    "scaled_rows",
    "sgso",
    "solve_all",
    "weighted_coeffs",
    "weighted_geninv",
    "weighted_sgso",
    "write_matrix_csv",
]

__version__ = "0.1.0"
