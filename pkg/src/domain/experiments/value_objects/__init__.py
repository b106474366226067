"""Experiment value objects"""

from .run_config import RunConfig, RunMode
from .power_law_fit import PowerLawFit
from .validation_result import ValidationResult

__all__ = [
    "RunConfig",
    "RunMode",
    "PowerLawFit",
    "ValidationResult",
]
