"""Independent validation paths for the measurement and protocol contexts"""

from .value_objects import GeneralDyneUpdate, FockState, RunningMoments
from .general_dyne import detector_covariance, general_dyne_update
from .monte_carlo import EnergyEstimate, monte_carlo_energy
from .fock import (
    DEFAULT_CUTOFF,
    fock_ground_state,
    fock_log_negativity,
    fock_vacuum,
    fock_coherent_product,
    fock_covariance,
    two_site_covariance,
)

__all__ = [
    "GeneralDyneUpdate",
    "FockState",
    "RunningMoments",
    "detector_covariance",
    "general_dyne_update",
    "EnergyEstimate",
    "monte_carlo_energy",
    "DEFAULT_CUTOFF",
    "fock_ground_state",
    "fock_log_negativity",
    "fock_vacuum",
    "fock_coherent_product",
    "fock_covariance",
    "two_site_covariance",
]
