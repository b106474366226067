"""Coherent-state measurement context"""

from .value_objects import MeasurementSpec, OutcomeDistribution, PostMeasurementState
from .povm_measurement import (
    spd_factor,
    build_m_matrix,
    post_measurement_covariance,
    outcome_distribution,
    sample_outcomes,
)

__all__ = [
    "MeasurementSpec",
    "OutcomeDistribution",
    "PostMeasurementState",
    "spd_factor",
    "build_m_matrix",
    "post_measurement_covariance",
    "outcome_distribution",
    "sample_outcomes",
]
