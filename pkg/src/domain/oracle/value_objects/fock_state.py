"""Two-mode truncated Fock state"""

from typing import Optional

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException

NORM_TOLERANCE = 1e-8


class FockState(ValueObject):
    """Amplitudes psi[m, n] on |m>|n> with m, n < cutoff

    ``energy`` is the eigenvalue when the state came out of a diagonalisation.
    """

    def __init__(self, amplitudes: np.ndarray, energy: Optional[float] = None):
        amplitudes = np.array(amplitudes, dtype=complex, copy=True)
        if amplitudes.ndim != 2 or amplitudes.shape[0] != amplitudes.shape[1]:
            raise InvalidArgumentException("amplitudes", "Expected a square two-mode amplitude table")
        norm = float(np.sum(np.abs(amplitudes) ** 2))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidArgumentException("amplitudes", f"State is not normalised (norm {norm:.12g})")
        amplitudes.flags.writeable = False
        self._amplitudes = amplitudes
        self._energy = None if energy is None else float(energy)

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amplitudes

    @property
    def energy(self) -> Optional[float]:
        return self._energy

    @property
    def cutoff(self) -> int:
        return self._amplitudes.shape[0]

    @property
    def vector(self) -> np.ndarray:
        """Flattened amplitudes in the kron(mode 0, mode 1) basis"""
        return self._amplitudes.reshape(-1)

    def norm(self) -> float:
        return float(np.sum(np.abs(self._amplitudes) ** 2))

    def top_level_population(self) -> float:
        """Weight on states with either mode at the highest kept number level"""
        top = np.abs(self._amplitudes[-1, :]) ** 2
        side = np.abs(self._amplitudes[:-1, -1]) ** 2
        return float(np.sum(top) + np.sum(side))

    def _equality_components(self) -> tuple:
        return (self._amplitudes,)
