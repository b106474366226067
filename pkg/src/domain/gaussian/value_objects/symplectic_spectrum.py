"""Symplectic spectrum value object"""

from typing import Iterator

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException, frozen_array


class SymplecticSpectrum(ValueObject):

    def __init__(self, values):
        values = np.sort(np.asarray(values, dtype=float))
        if values.ndim != 1 or len(values) == 0:
            raise InvalidArgumentException("values", "Spectrum must be a non-empty vector")
        if np.any(values < 0):
            raise InvalidArgumentException("values", "Symplectic eigenvalues cannot be negative")
        self._values = frozen_array(values)

    @property
    def values(self) -> np.ndarray:
        """Ascending"""
        return self._values

    @property
    def n_modes(self) -> int:
        return len(self._values)

    @property
    def minimum(self) -> float:
        return float(self._values[0])

    def is_pure(self, tol: float = 1e-9) -> bool:
        return bool(np.all(np.abs(self._values - 0.5) <= tol))

    def __iter__(self) -> Iterator[float]:
        return iter(self._values.tolist())

    def __len__(self) -> int:
        return len(self._values)

    def _equality_components(self) -> tuple:
        return (self._values,)
