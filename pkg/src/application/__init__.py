"""Application layer"""

from .services import ExperimentService, ExperimentResult, ValidationService

__all__ = [
    "ExperimentService",
    "ExperimentResult",
    "ValidationService",
]
