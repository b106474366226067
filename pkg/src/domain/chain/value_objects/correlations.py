"""Ground-state correlation vectors"""

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array


class Correlations(ValueObject):
    """Translation-invariant two-point functions of the chain ground state.

    ``g[r] = <q_i q_{i+r}>``, ``h[r] = <p_i p_{i+r}>`` and ``epsilon`` is the per-site
    energy offset that makes ``<g|H_n|g> = 0``.
    """

    def __init__(self, g: np.ndarray, h: np.ndarray, epsilon: float, alpha: float):
        g = frozen_array(g)
        h = frozen_array(h)
        if g.ndim != 1 or g.shape != h.shape:
            raise InvalidArgumentException("g", "g and h must be vectors of equal length")
        self._g = g
        self._h = h
        self._epsilon = float(epsilon)
        self._alpha = float(alpha)

    @property
    def g(self) -> np.ndarray:
        return self._g

    @property
    def h(self) -> np.ndarray:
        return self._h

    @property
    def epsilon(self) -> float:
        return self._epsilon

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def n_sites(self) -> int:
        return len(self._g)

    @property
    def site_energy_offset(self) -> float:
        """Offset zeroing the ground-state value of every chain term touching one site.

        That operator is ``(p_B^2 + q_B^2 - alpha q_B (q_{B-1} + q_{B+1}))/2``; it holds both
        bonds of B rather than half of each, hence ``epsilon - alpha g_1``.
        """
        return self._epsilon - self._alpha * float(self._g[1])

    def _equality_components(self) -> tuple:
        return (self._g, self._h, self._epsilon, self._alpha)
