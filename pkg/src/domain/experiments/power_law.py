"""Power-law fits of sweep columns"""

import logging
import math
import warnings
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import OptimizeWarning, curve_fit
from scipy.stats import linregress

from domain.shared import FitException, InvalidArgumentException
from .value_objects import PowerLawFit

logger = logging.getLogger(__name__)

MIN_POINTS = 3
TAIL_FRACTION = 0.1


def _power_law(x, amplitude, exponent, offset):
    return amplitude * np.power(x, exponent) + offset


def _r_squared(observed: np.ndarray, predicted: np.ndarray) -> float:
    residual = float(np.sum((observed - predicted) ** 2))
    total = float(np.sum((observed - observed.mean()) ** 2))
    if total == 0.0:
        return 1.0 if residual == 0.0 else 0.0
    return float(np.clip(1.0 - residual / total, 0.0, 1.0))


def _log_log(x: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
    result = linregress(np.log(x), np.log(y))
    return math.exp(result.intercept), float(result.slope), float(result.rvalue) ** 2


def fit_power_law(
    points,
    with_offset: bool = False,
    window: Optional[Tuple[float, float]] = None,
    quantity: str = "y",
) -> PowerLawFit:
    """Fit y = m x**p, or y = m x**p + b with ``with_offset``.

    ``points`` is a sequence of (x, y) pairs; ``window`` keeps lo <= x <= hi.
    The offset starts at the mean of the last tenth of the points (by x), the remaining
    positive residuals give a log-log starting point and a joint least-squares fit
    refines all three parameters.
    """
    data = np.asarray(points, dtype=float)
    if data.ndim != 2 or data.shape[1] != 2:
        raise InvalidArgumentException("points", "points must be a sequence of (x, y) pairs")
    data = data[np.argsort(data[:, 0], kind="stable")]
    if window is not None:
        lo, hi = window
        data = data[(data[:, 0] >= lo) & (data[:, 0] <= hi)]
    else:
        window = (float(data[0, 0]), float(data[-1, 0])) if len(data) else (math.nan, math.nan)

    if len(data) < MIN_POINTS:
        raise FitException(quantity, f"Need at least {MIN_POINTS} points to fit {quantity}, got {len(data)}")
    x, y = data[:, 0], data[:, 1]
    if np.any(x <= 0) or not np.all(np.isfinite(data)):
        raise FitException(quantity, f"Abscissae of {quantity} must be positive and finite")

    if not with_offset:
        if np.any(y <= 0):
            raise FitException(quantity, f"{quantity} has non-positive values; cannot take logarithms")
        amplitude, exponent, r2 = _log_log(x, y)
        logger.debug(f"Fit {quantity}: {amplitude:.4g} x^{exponent:.4g} (r2={r2:.6f})")
        return PowerLawFit(quantity, amplitude, exponent, float(np.clip(r2, 0.0, 1.0)), window, len(x))

    tail = max(1, math.ceil(TAIL_FRACTION * len(x)))
    offset = float(np.mean(y[-tail:]))
    residual = y - offset
    positive = residual > 0
    if positive.sum() < 2:
        raise FitException(quantity, f"{quantity} has no positive residuals above the tail offset {offset:.6g}")
    if not positive.all():
        logger.warning(
            f"Fit {quantity}: dropped {int((~positive).sum())} non-positive residuals for the starting point"
        )
    amplitude, exponent, _ = _log_log(x[positive], residual[positive])

    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", OptimizeWarning)
            refined, _ = curve_fit(_power_law, x, y, p0=(amplitude, exponent, offset), maxfev=20000)
        if np.all(np.isfinite(refined)):
            amplitude, exponent, offset = (float(v) for v in refined)
        else:
            logger.warning(f"Fit {quantity}: refinement diverged, keeping the tail-offset estimate")
    except RuntimeError as e:
        logger.warning(f"Fit {quantity}: refinement failed ({e}), keeping the tail-offset estimate")

    r2 = _r_squared(y, _power_law(x, amplitude, exponent, offset))
    logger.debug(f"Fit {quantity}: {amplitude:.4g} x^{exponent:.4g} + {offset:.6g} (r2={r2:.6f})")
    return PowerLawFit(quantity, amplitude, exponent, r2, window, len(x), offset)
