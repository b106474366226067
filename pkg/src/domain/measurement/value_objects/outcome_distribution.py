"""Outcome distribution value object"""

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array


class OutcomeDistribution(ValueObject):
    """Zero-mean Gaussian law of the (X, P) outcomes; X and P are independent"""

    def __init__(self, x_covariance: np.ndarray, p_covariance: np.ndarray):
        x_covariance = np.asarray(x_covariance, dtype=float)
        p_covariance = np.asarray(p_covariance, dtype=float)
        for name, matrix in (("x_covariance", x_covariance), ("p_covariance", p_covariance)):
            if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
                raise InvalidArgumentException(name, f"{name} must be a non-empty square matrix")
        if x_covariance.shape != p_covariance.shape:
            raise InvalidArgumentException("p_covariance", "X and P covariances differ in size")

        self._x_covariance = frozen_array(x_covariance)
        self._p_covariance = frozen_array(p_covariance)

    @property
    def x_covariance(self) -> np.ndarray:
        return self._x_covariance

    @property
    def p_covariance(self) -> np.ndarray:
        return self._p_covariance

    @property
    def size(self) -> int:
        return self._x_covariance.shape[0]

    @property
    def means(self) -> np.ndarray:
        return np.zeros(self.size)

    def _equality_components(self) -> tuple:
        return (self._x_covariance, self._p_covariance)
