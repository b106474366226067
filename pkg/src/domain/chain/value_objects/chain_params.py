"""Chain parameters value object"""

import math
from enum import Enum

from domain.shared import ValueObject, InvalidArgumentException


class AlphaPreset(Enum):
    """Named couplings used throughout the sweeps"""

    A1 = "a1"
    A2 = "a2"
    A3 = "a3"
    A4 = "a4"  # critical, with a 1e-7 cutoff

    @classmethod
    def from_string(cls, value: str) -> "AlphaPreset":
        try:
            return cls(value.strip().lower())
        except (ValueError, AttributeError):
            raise InvalidArgumentException(
                "alpha", f"Unknown alpha preset: {value!r}"
            ) from None

    @property
    def alpha(self) -> float:
        return _PRESET_VALUES[self]

    def __str__(self) -> str:
        return self.value


_PRESET_VALUES = {
    AlphaPreset.A1: 0.90,
    AlphaPreset.A2: 0.95,
    AlphaPreset.A3: 0.99,
    AlphaPreset.A4: 1.0 - 1e-7,
}


def resolve_alpha(value) -> float:
    """Accept a preset name (``a1``..``a4``) or a literal coupling"""
    if isinstance(value, str):
        text = value.strip().lower()
        if text.startswith("a"):
            return AlphaPreset.from_string(text).alpha
        try:
            return float(text)
        except ValueError:
            raise InvalidArgumentException(
                "alpha", f"Malformed alpha value: {value!r}"
            ) from None
    return float(value)


class ChainParams(ValueObject):
    """Periodic harmonic chain: N sites, coupling alpha, POVM frequency omega"""

    MIN_SITES = 4

    def __init__(self, n_sites: int, alpha: float, omega: float = 1.0):
        if isinstance(n_sites, bool) or int(n_sites) != n_sites:
            raise InvalidArgumentException("n_sites", "n_sites must be an integer")
        n_sites = int(n_sites)
        if n_sites < self.MIN_SITES or n_sites % 2:
            raise InvalidArgumentException(
                "n_sites", f"n_sites must be even and >= {self.MIN_SITES}, got {n_sites}"
            )
        alpha = float(alpha)
        if not (0.0 <= alpha < 1.0):
            raise InvalidArgumentException(
                "alpha", f"alpha must lie in [0, 1), got {alpha!r}"
            )
        omega = float(omega)
        if not (omega > 0.0 and math.isfinite(omega)):
            raise InvalidArgumentException(
                "omega", f"omega must be a positive finite number, got {omega!r}"
            )

        self._n_sites = n_sites
        self._alpha = alpha
        self._omega = omega

    @property
    def n_sites(self) -> int:
        return self._n_sites

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def omega(self) -> float:
        return self._omega

    @property
    def max_ell(self) -> int:
        """Largest admissible half-width of a measured block"""
        return self._n_sites // 2 - 2

    def site(self, index: int) -> int:
        """Wrap an index onto the ring"""
        return int(index) % self._n_sites

    def check_site(self, index: int, argument_name: str = "site") -> int:
        if isinstance(index, bool) or int(index) != index:
            raise InvalidArgumentException(argument_name, f"Site index must be an integer: {index!r}")
        if not (0 <= int(index) < self._n_sites):
            raise InvalidArgumentException(
                argument_name,
                f"Site index {index} out of range 0..{self._n_sites - 1}",
            )
        return int(index)

    def with_omega(self, omega: float) -> "ChainParams":
        return ChainParams(self._n_sites, self._alpha, omega)

    def with_n_sites(self, n_sites: int) -> "ChainParams":
        return ChainParams(n_sites, self._alpha, self._omega)

    def _equality_components(self) -> tuple:
        return (self._n_sites, self._alpha, self._omega)
