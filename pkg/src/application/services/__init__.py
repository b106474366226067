"""Application services"""

from .experiment_service import ExperimentService, ExperimentResult
from .validation_service import ValidationService

__all__ = [
    "ExperimentService",
    "ExperimentResult",
    "ValidationService",
]
