"""Application settings"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .constants import (
    APP_NAME,
    APP_VERSION,
    CSV_SIGNIFICANT_DIGITS,
    DEFAULT_ALPHA,
    DEFAULT_D_RANGE,
    DEFAULT_FOCK_CUTOFF,
    DEFAULT_MC_SAMPLES,
    DEFAULT_N_LIST,
    DEFAULT_N_SITES,
    DEFAULT_OMEGA,
    SETTING1_FIT_WINDOW,
    SIZE_SWEEP_FIT_WINDOW,
)
from .exceptions import ConfigurationException

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class Settings:
    """Defaults for every run parameter; flags and config files override them"""

    app_name: str = APP_NAME
    app_version: str = APP_VERSION
    log_level: str = "INFO"

    n_sites: int = DEFAULT_N_SITES
    alpha: float = DEFAULT_ALPHA
    omega: float = DEFAULT_OMEGA
    d_min: int = DEFAULT_D_RANGE[0]
    d_max: int = DEFAULT_D_RANGE[1]
    ell_min: int = 1
    ell_max: Optional[int] = None
    n_list: Tuple[int, ...] = DEFAULT_N_LIST
    setting1_fit_window: Tuple[float, float] = SETTING1_FIT_WINDOW
    size_sweep_fit_window: Tuple[float, float] = SIZE_SWEEP_FIT_WINDOW
    omega_sensitivity: Tuple[float, ...] = field(default_factory=tuple)

    seed: int = 0
    samples: int = DEFAULT_MC_SAMPLES
    fock_cutoff: int = DEFAULT_FOCK_CUTOFF
    threads: int = 0  # 0 lets the executor pick
    csv_significant_digits: int = CSV_SIGNIFICANT_DIGITS
    cache_ttl: Optional[int] = None  # correlations never go stale

    def __post_init__(self):
        self.log_level = str(self.log_level).upper()
        if self.log_level not in LOG_LEVELS:
            raise ConfigurationException("log_level", f"Unknown log level {self.log_level!r}")
        if self.threads < 0:
            raise ConfigurationException("threads", "threads must be >= 0")
        if self.csv_significant_digits < 1:
            raise ConfigurationException("csv_significant_digits", "Need at least one significant digit")

    @property
    def max_workers(self) -> Optional[int]:
        return self.threads or None


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings
