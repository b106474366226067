"""General-dyne conditioning result"""

from typing import Optional, Sequence, Tuple

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array, as_index_tuple
from domain.gaussian import CovarianceMatrix


class GeneralDyneUpdate(ValueObject):
    """Gaussian conditioning of the unmeasured modes on a heterodyne-type record.

    The outcome vector is interleaved like the covariance, (X_a0, P_a0, X_a1, P_a1, ...),
    and ``gain`` maps it to the conditional means of the unmeasured modes in
    ``unmeasured_modes`` order.
    """

    def __init__(
        self,
        conditional_covariance: CovarianceMatrix,
        gain: np.ndarray,
        measured_modes: Tuple[int, ...],
        unmeasured_modes: Tuple[int, ...],
    ):
        gain = np.asarray(gain, dtype=float)
        measured_modes = as_index_tuple(measured_modes)
        unmeasured_modes = as_index_tuple(unmeasured_modes)
        expected = (2 * len(unmeasured_modes), 2 * len(measured_modes))
        if gain.shape != expected:
            raise InvalidArgumentException("gain", f"Gain must have shape {expected}, got {gain.shape}")
        if conditional_covariance.n_modes != len(unmeasured_modes):
            raise InvalidArgumentException("conditional_covariance", "Covariance size mismatch")

        self._conditional_covariance = conditional_covariance
        self._gain = frozen_array(gain)
        self._measured_modes = measured_modes
        self._unmeasured_modes = unmeasured_modes

    @property
    def conditional_covariance(self) -> CovarianceMatrix:
        return self._conditional_covariance

    @property
    def gain(self) -> np.ndarray:
        return self._gain

    @property
    def measured_modes(self) -> Tuple[int, ...]:
        return self._measured_modes

    @property
    def unmeasured_modes(self) -> Tuple[int, ...]:
        return self._unmeasured_modes

    def position_of(self, mode: int) -> int:
        """Index of ``mode`` inside the conditional covariance"""
        try:
            return self._unmeasured_modes.index(int(mode))
        except ValueError:
            raise InvalidArgumentException("mode", f"Mode {mode} was measured") from None

    def conditional_means(self, outcomes: np.ndarray, rows: Optional[Sequence[int]] = None) -> np.ndarray:
        """Means of the unmeasured quadratures for a batch of interleaved outcomes.

        ``rows`` picks quadrature rows of the conditional covariance; all of them by default.
        """
        gain = self._gain if rows is None else self._gain[np.asarray(rows, dtype=int)]
        return np.asarray(outcomes, dtype=float) @ gain.T

    def _equality_components(self) -> tuple:
        return (self._conditional_covariance, self._gain, self._measured_modes)
