"""Post-measurement state value object"""

from typing import Tuple

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array, as_index_tuple
from domain.gaussian import CovarianceMatrix, reduce


class PostMeasurementState(ValueObject):
    """Chain covariance after the POVM, identical for every outcome.

    ``m_matrix`` is the Schur complement over the unmeasured sites, listed in
    ``unmeasured_sites`` order.
    """

    def __init__(
        self,
        covariance: CovarianceMatrix,
        m_matrix: np.ndarray,
        measured_sites: Tuple[int, ...],
        unmeasured_sites: Tuple[int, ...],
    ):
        m_matrix = np.asarray(m_matrix, dtype=float)
        unmeasured_sites = as_index_tuple(unmeasured_sites)
        if m_matrix.shape != (len(unmeasured_sites), len(unmeasured_sites)):
            raise InvalidArgumentException("m_matrix", "M must be square over the unmeasured sites")
        if covariance.n_modes != len(unmeasured_sites) + len(measured_sites):
            raise InvalidArgumentException("covariance", "Covariance does not cover the whole chain")

        self._covariance = covariance
        self._m_matrix = frozen_array(m_matrix)
        self._measured_sites = as_index_tuple(measured_sites)
        self._unmeasured_sites = unmeasured_sites

    @property
    def covariance(self) -> CovarianceMatrix:
        return self._covariance

    @property
    def m_matrix(self) -> np.ndarray:
        return self._m_matrix

    @property
    def measured_sites(self) -> Tuple[int, ...]:
        return self._measured_sites

    @property
    def unmeasured_sites(self) -> Tuple[int, ...]:
        return self._unmeasured_sites

    def unmeasured_covariance(self) -> CovarianceMatrix:
        return reduce(self._covariance, self._unmeasured_sites)

    def _equality_components(self) -> tuple:
        return (self._covariance, self._m_matrix, self._measured_sites)
