"""Gaussian state value objects"""

from .covariance_matrix import CovarianceMatrix, mode_indices
from .symplectic_spectrum import SymplecticSpectrum

__all__ = [
    "CovarianceMatrix",
    "mode_indices",
    "SymplecticSpectrum",
]
