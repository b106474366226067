"""Displacement plan value object"""

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array


class DisplacementPlan(ValueObject):
    """Outcome weights of the shift at the target: p_B += theta.P and q_B += phi.X"""

    def __init__(self, theta, phi):
        theta = np.atleast_1d(np.asarray(theta, dtype=float))
        phi = np.atleast_1d(np.asarray(phi, dtype=float))
        if theta.ndim != 1 or theta.shape != phi.shape:
            raise InvalidArgumentException("phi", "theta and phi must be vectors of equal length")
        if not (np.all(np.isfinite(theta)) and np.all(np.isfinite(phi))):
            raise InvalidArgumentException("theta", "Displacement weights must be finite")
        self._theta = frozen_array(theta)
        self._phi = frozen_array(phi)

    @classmethod
    def zero(cls, size: int) -> "DisplacementPlan":
        return cls(np.zeros(size), np.zeros(size))

    @property
    def theta(self) -> np.ndarray:
        return self._theta

    @property
    def phi(self) -> np.ndarray:
        return self._phi

    @property
    def size(self) -> int:
        return len(self._theta)

    def scaled(self, theta_factor: float = 1.0, phi_factor: float = 1.0) -> "DisplacementPlan":
        return DisplacementPlan(theta_factor * self._theta, phi_factor * self._phi)

    def _equality_components(self) -> tuple:
        return (self._theta, self._phi)
