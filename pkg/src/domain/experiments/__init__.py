"""Experiment context: run configuration, sweep tables and fits"""

from .value_objects import RunConfig, RunMode, PowerLawFit, ValidationResult
from .aggregates import SweepTable, SETTING1_COLUMNS, SETTING2_COLUMNS, SIZE_SWEEP_COLUMNS
from .events import SweepRowRecordedEvent, SweepCompletedEvent
from .power_law import MIN_POINTS as MIN_FIT_POINTS, fit_power_law

__all__ = [
    "RunConfig",
    "RunMode",
    "PowerLawFit",
    "ValidationResult",
    "SweepTable",
    "SETTING1_COLUMNS",
    "SETTING2_COLUMNS",
    "SIZE_SWEEP_COLUMNS",
    "SweepRowRecordedEvent",
    "SweepCompletedEvent",
    "fit_power_law",
    "MIN_FIT_POINTS",
]
