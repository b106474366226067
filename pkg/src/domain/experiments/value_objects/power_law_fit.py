"""Power-law fit value object"""

import math
from typing import Optional, Tuple

import numpy as np

from domain.shared import ValueObject, InvalidArgumentException


class PowerLawFit(ValueObject):
    """y = amplitude * x**exponent (+ offset)"""

    def __init__(
        self,
        quantity: str,
        amplitude: float,
        exponent: float,
        r_squared: float,
        window: Tuple[float, float],
        n_points: int,
        offset: Optional[float] = None,
    ):
        if not math.isfinite(exponent):
            raise InvalidArgumentException("exponent", "Fitted exponent is not finite")
        if not 0.0 <= r_squared <= 1.0:
            raise InvalidArgumentException("r_squared", f"r^2 must lie in [0, 1], got {r_squared}")
        self._quantity = quantity
        self._amplitude = float(amplitude)
        self._exponent = float(exponent)
        self._r_squared = float(r_squared)
        self._window = (float(window[0]), float(window[1]))
        self._n_points = int(n_points)
        self._offset = None if offset is None else float(offset)

    @property
    def quantity(self) -> str:
        return self._quantity

    @property
    def amplitude(self) -> float:
        return self._amplitude

    @property
    def exponent(self) -> float:
        return self._exponent

    @property
    def offset(self) -> Optional[float]:
        return self._offset

    @property
    def has_offset(self) -> bool:
        return self._offset is not None

    @property
    def r_squared(self) -> float:
        return self._r_squared

    @property
    def window(self) -> Tuple[float, float]:
        return self._window

    @property
    def n_points(self) -> int:
        return self._n_points

    def evaluate(self, x) -> np.ndarray:
        y = self._amplitude * np.power(np.asarray(x, dtype=float), self._exponent)
        return y + (self._offset or 0.0)

    def renamed(self, quantity: str) -> "PowerLawFit":
        return PowerLawFit(
            quantity,
            self._amplitude,
            self._exponent,
            self._r_squared,
            self._window,
            self._n_points,
            self._offset,
        )

    def _equality_components(self) -> tuple:
        return (
            self._quantity,
            self._amplitude,
            self._exponent,
            self._r_squared,
            self._window,
            self._n_points,
            self._offset,
        )
