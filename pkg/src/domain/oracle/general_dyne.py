"""Heterodyne-type conditioning of a Gaussian state, written from the covariance alone"""

import logging
from typing import Sequence

import numpy as np
from scipy.linalg import cho_solve

from domain.shared import InvalidArgumentException
from domain.gaussian import CovarianceLike, CovarianceMatrix, as_covariance, mode_indices
from domain.measurement import spd_factor
from .value_objects import GeneralDyneUpdate

logger = logging.getLogger(__name__)


def detector_covariance(n_modes: int, omega: float) -> np.ndarray:
    """Coherent-state projector covariance, diag(1/(2 omega), omega/2) per mode"""
    return np.kron(np.eye(n_modes), np.diag([0.5 / omega, 0.5 * omega]))


def general_dyne_update(V: CovarianceLike, measured: Sequence[int], omega: float) -> GeneralDyneUpdate:
    """V_BB - V_BA (V_AA + V_m)^-1 V_AB, with the matching gain V_BA (V_AA + V_m)^-1"""
    V = as_covariance(V)
    measured = [int(m) for m in measured]
    if not measured:
        raise InvalidArgumentException("measured", "At least one mode must be measured")
    if len(set(measured)) != len(measured) or any(not 0 <= m < V.n_modes for m in measured):
        raise InvalidArgumentException("measured", f"Invalid measured modes: {measured}")
    if len(measured) >= V.n_modes:
        raise InvalidArgumentException("measured", "At least one mode must stay unmeasured")
    if not omega > 0:
        raise InvalidArgumentException("omega", f"omega must be positive, got {omega!r}")

    kept = [m for m in range(V.n_modes) if m not in set(measured)]
    a_idx = mode_indices(measured)
    b_idx = mode_indices(kept)
    v_aa = V.entries[np.ix_(a_idx, a_idx)]
    v_ab = V.entries[np.ix_(a_idx, b_idx)]
    v_bb = V.entries[np.ix_(b_idx, b_idx)]

    factor = spd_factor(v_aa + detector_covariance(len(measured), omega), "general_dyne_update")
    gain = cho_solve(factor, v_ab).T
    conditional = v_bb - gain @ v_ab
    conditional = 0.5 * (conditional + conditional.T)

    logger.debug(f"General-dyne update: {len(measured)} measured, {len(kept)} kept")
    return GeneralDyneUpdate(CovarianceMatrix(conditional), gain, tuple(measured), tuple(kept))
