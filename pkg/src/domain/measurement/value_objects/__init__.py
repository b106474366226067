"""Measurement value objects"""

from .measurement_spec import MeasurementSpec
from .outcome_distribution import OutcomeDistribution
from .post_measurement_state import PostMeasurementState

__all__ = [
    "MeasurementSpec",
    "OutcomeDistribution",
    "PostMeasurementState",
]
