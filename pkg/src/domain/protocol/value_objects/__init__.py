"""Protocol value objects"""

from .displacement_plan import DisplacementPlan
from .qet_quadratics import QetQuadratics
from .qet_report import QetReport

__all__ = [
    "DisplacementPlan",
    "QetQuadratics",
    "QetReport",
]
