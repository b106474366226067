"""Oracle value objects"""

from .general_dyne_update import GeneralDyneUpdate
from .fock_state import FockState
from .running_moments import RunningMoments

__all__ = [
    "GeneralDyneUpdate",
    "FockState",
    "RunningMoments",
]
