"""Harmonic chain context"""

from .value_objects import ChainParams, AlphaPreset, resolve_alpha, Correlations
from .repositories import CorrelationRepository
from .chain_model import (
    dispersion,
    mode_sums,
    build_correlations,
    resolve_correlations,
    correlation_submatrices,
    ground_covariance,
)

__all__ = [
    "ChainParams",
    "AlphaPreset",
    "resolve_alpha",
    "Correlations",
    "CorrelationRepository",
    "dispersion",
    "mode_sums",
    "build_correlations",
    "resolve_correlations",
    "correlation_submatrices",
    "ground_covariance",
]
