"""Gaussian state context"""

from .value_objects import CovarianceMatrix, SymplecticSpectrum, mode_indices
from .gaussian_state import (
    CovarianceLike,
    as_covariance,
    symplectic_form,
    symplectic_eigenvalues,
    reduce,
    partial_transpose,
    log_negativity,
    entropy_function,
    von_neumann_entropy,
    mutual_information,
)

__all__ = [
    "CovarianceLike",
    "as_covariance",
    "CovarianceMatrix",
    "SymplecticSpectrum",
    "mode_indices",
    "symplectic_form",
    "symplectic_eigenvalues",
    "reduce",
    "partial_transpose",
    "log_negativity",
    "entropy_function",
    "von_neumann_entropy",
    "mutual_information",
]
