"""Run configuration value object"""

from enum import Enum
from typing import Optional, Sequence, Tuple

from domain.shared import ValueObject, InvalidArgumentException, BusinessRuleViolationException
from domain.chain import ChainParams

MIN_SWEEP_SITES = 6
MIN_SAMPLES = 1_000


class RunMode(Enum):
    SETTING1 = "setting1"
    SETTING2 = "setting2"
    SIZE_SWEEP = "size-sweep"
    VALIDATE = "validate"

    @classmethod
    def from_string(cls, value: str) -> "RunMode":
        try:
            return cls(value.strip().lower())
        except (ValueError, AttributeError):
            raise InvalidArgumentException("mode", f"Unknown run mode: {value!r}") from None

    def __str__(self) -> str:
        return self.value


class RunConfig(ValueObject):
    """Everything one CLI invocation needs besides runtime knobs such as thread count.

    ``ell_max=None`` means the largest block the chain admits; ``fit_window=None``
    disables fitting.
    """

    def __init__(
        self,
        mode: RunMode,
        n_sites: int = 100,
        alpha: float = 0.9,
        omega: float = 1.0,
        d_min: int = 0,
        d_max: int = 40,
        ell_min: int = 1,
        ell_max: Optional[int] = None,
        n_list: Sequence[int] = (20, 40, 60, 80, 100),
        fit_window: Optional[Tuple[float, float]] = None,
        out: Optional[str] = None,
        seed: int = 0,
        samples: int = 1_000_000,
        omega_sensitivity: Sequence[float] = (),
    ):
        self._mode = mode
        self._params = ChainParams(n_sites, alpha, omega)
        self._d_min = int(d_min)
        self._d_max = int(d_max)
        self._ell_min = int(ell_min)
        self._ell_max = self._params.max_ell if ell_max is None else int(ell_max)
        self._n_list = tuple(int(n) for n in n_list)
        self._fit_window = None if fit_window is None else (float(fit_window[0]), float(fit_window[1]))
        self._out = out
        self._seed = int(seed)
        self._samples = int(samples)
        self._omega_sensitivity = tuple(float(w) for w in omega_sensitivity)
        self._validate()

    def _validate(self) -> None:
        n = self._params.n_sites
        if self._mode is RunMode.SETTING1:
            if not 0 <= self._d_min <= self._d_max:
                raise InvalidArgumentException(
                    "d_max", f"Need 0 <= d_min <= d_max, got {self._d_min}..{self._d_max}"
                )
            if self._d_max > n - 2:
                raise BusinessRuleViolationException(
                    "distinct_sites", f"d_max={self._d_max} wraps B onto A for N={n}"
                )
        if self._mode is RunMode.SETTING2:
            if not 1 <= self._ell_min <= self._ell_max <= self._params.max_ell:
                raise InvalidArgumentException(
                    "ell_max",
                    f"Need 1 <= ell_min <= ell_max <= {self._params.max_ell}, "
                    f"got {self._ell_min}..{self._ell_max}",
                )
        if self._mode is RunMode.SIZE_SWEEP:
            if not self._n_list:
                raise InvalidArgumentException("n_list", "Size sweep needs at least one N")
            bad = [m for m in self._n_list if m % 2 or m < MIN_SWEEP_SITES]
            if bad:
                raise BusinessRuleViolationException(
                    "size_sweep_sites", f"Size sweep needs even N >= {MIN_SWEEP_SITES}, got {bad}"
                )
        if self._fit_window is not None and not self._fit_window[0] < self._fit_window[1]:
            raise InvalidArgumentException("fit_window", f"Empty fit window {self._fit_window}")
        if self._seed < 0:
            raise InvalidArgumentException("seed", "seed must be non-negative")
        if self._samples < MIN_SAMPLES:
            raise InvalidArgumentException("samples", f"samples must be >= {MIN_SAMPLES}")
        for w in self._omega_sensitivity:
            if not w > 0:
                raise InvalidArgumentException("omega_sensitivity", f"omega must be positive, got {w}")

    @property
    def mode(self) -> RunMode:
        return self._mode

    @property
    def params(self) -> ChainParams:
        return self._params

    @property
    def n_sites(self) -> int:
        return self._params.n_sites

    @property
    def alpha(self) -> float:
        return self._params.alpha

    @property
    def omega(self) -> float:
        return self._params.omega

    @property
    def d_range(self) -> range:
        return range(self._d_min, self._d_max + 1)

    @property
    def ell_range(self) -> range:
        return range(self._ell_min, self._ell_max + 1)

    @property
    def n_list(self) -> Tuple[int, ...]:
        return self._n_list

    @property
    def fit_window(self) -> Optional[Tuple[float, float]]:
        return self._fit_window

    @property
    def out(self) -> Optional[str]:
        return self._out

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def samples(self) -> int:
        return self._samples

    @property
    def omega_sensitivity(self) -> Tuple[float, ...]:
        return self._omega_sensitivity

    def with_omega(self, omega: float) -> "RunConfig":
        """Same run at another POVM frequency, without further sensitivity points"""
        return RunConfig(
            self._mode,
            self._params.n_sites,
            self._params.alpha,
            omega,
            self._d_min,
            self._d_max,
            self._ell_min,
            self._ell_max,
            self._n_list,
            self._fit_window,
            self._out,
            self._seed,
            self._samples,
        )

    def _equality_components(self) -> tuple:
        return (
            self._mode,
            self._params,
            self._d_min,
            self._d_max,
            self._ell_min,
            self._ell_max,
            self._n_list,
            self._fit_window,
            self._out,
            self._seed,
            self._samples,
            self._omega_sensitivity,
        )
