"""QET protocol context"""

from .value_objects import DisplacementPlan, QetQuadratics, QetReport
from .qet_protocol import (
    build_quadratics,
    optimal_plan,
    optimized_energy,
    plan_energy,
    run_setting1,
    run_setting2,
)

__all__ = [
    "DisplacementPlan",
    "QetQuadratics",
    "QetReport",
    "build_quadratics",
    "optimal_plan",
    "optimized_energy",
    "plan_energy",
    "run_setting1",
    "run_setting2",
]
