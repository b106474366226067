"""QET report value object"""

import math
from typing import Tuple

from domain.shared import ValueObject, InvalidArgumentException, as_index_tuple
from .displacement_plan import DisplacementPlan


class QetReport(ValueObject):
    """Outcome of one protocol run: extracted energy, plan and entanglement bookkeeping.

    Entanglement measures refer to the A:B bipartition of the run; deltas are
    before minus after.
    """

    def __init__(
        self,
        optimized_energy: float,
        plan: DisplacementPlan,
        e_n_before: float,
        e_n_after: float,
        s_m_before: float,
        s_m_after: float,
        target_site: int,
        measured_sites: Tuple[int, ...],
    ):
        optimized_energy = float(optimized_energy)
        if not optimized_energy <= 0.0:
            raise InvalidArgumentException(
                "optimized_energy", f"Optimized energy must be <= 0, got {optimized_energy!r}"
            )
        self._optimized_energy = optimized_energy
        self._plan = plan
        self._e_n_before = float(e_n_before)
        self._e_n_after = float(e_n_after)
        self._s_m_before = float(s_m_before)
        self._s_m_after = float(s_m_after)
        self._target_site = int(target_site)
        self._measured_sites = as_index_tuple(measured_sites)

    @property
    def optimized_energy(self) -> float:
        return self._optimized_energy

    @property
    def energy_magnitude(self) -> float:
        return abs(self._optimized_energy)

    @property
    def plan(self) -> DisplacementPlan:
        return self._plan

    @property
    def e_n_before(self) -> float:
        return self._e_n_before

    @property
    def e_n_after(self) -> float:
        return self._e_n_after

    @property
    def s_m_before(self) -> float:
        return self._s_m_before

    @property
    def s_m_after(self) -> float:
        return self._s_m_after

    @property
    def delta_log_negativity(self) -> float:
        return self._e_n_before - self._e_n_after

    @property
    def delta_mutual_information(self) -> float:
        return self._s_m_before - self._s_m_after

    @property
    def target_site(self) -> int:
        return self._target_site

    @property
    def measured_sites(self) -> Tuple[int, ...]:
        return self._measured_sites

    @property
    def ratio(self) -> float:
        """|E_B| / delta E_N, NaN when the measurement destroys no negativity"""
        delta = self.delta_log_negativity
        if delta <= 0.0:
            return math.nan
        return self.energy_magnitude / delta

    def satisfies_bound(self, beta: float = 1.0) -> bool:
        """|E_B| < beta * delta E_N"""
        return self.energy_magnitude < beta * self.delta_log_negativity

    def _equality_components(self) -> tuple:
        return (
            self._optimized_energy,
            self._plan,
            self._e_n_before,
            self._e_n_after,
            self._s_m_before,
            self._s_m_after,
            self._target_site,
            self._measured_sites,
        )
