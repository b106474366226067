"""Quadratic energy form value object"""

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array

# couplings below this, relative to the T blocks, are cosine-sum rounding
TRIVIAL_TOLERANCE = 1e-14


class QetQuadratics(ValueObject):
    """Coefficients of the outcome-averaged target energy as a function of the plan:

    E(theta, phi) = theta.T_p.theta / 2 + J_p.theta + phi.T_q.phi / 2 + J_q.phi
    """

    def __init__(self, t_p, t_q, j_p, j_q):
        t_p = np.atleast_2d(np.asarray(t_p, dtype=float))
        t_q = np.atleast_2d(np.asarray(t_q, dtype=float))
        j_p = np.atleast_1d(np.asarray(j_p, dtype=float))
        j_q = np.atleast_1d(np.asarray(j_q, dtype=float))
        size = len(j_p)
        if j_q.shape != (size,) or t_p.shape != (size, size) or t_q.shape != (size, size):
            raise InvalidArgumentException("t_p", "Quadratic form blocks have inconsistent shapes")
        self._t_p = frozen_array(t_p)
        self._t_q = frozen_array(t_q)
        self._j_p = frozen_array(j_p)
        self._j_q = frozen_array(j_q)

    @property
    def t_p(self) -> np.ndarray:
        return self._t_p

    @property
    def t_q(self) -> np.ndarray:
        return self._t_q

    @property
    def j_p(self) -> np.ndarray:
        return self._j_p

    @property
    def j_q(self) -> np.ndarray:
        return self._j_q

    @property
    def size(self) -> int:
        return len(self._j_p)

    @property
    def is_trivial(self) -> bool:
        """No correlation between the measured sites and the target"""
        scale = TRIVIAL_TOLERANCE * max(1.0, float(np.max(np.abs(self._t_p))), float(np.max(np.abs(self._t_q))))
        return bool(np.all(np.abs(self._j_p) <= scale) and np.all(np.abs(self._j_q) <= scale))

    def _equality_components(self) -> tuple:
        return (self._t_p, self._t_q, self._j_p, self._j_q)
