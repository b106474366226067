"""Ground state of the periodic harmonic chain.

H = sum_n [p_n^2 + q_n^2 - alpha q_n q_{n+1}] / 2 with q_{N} = q_0, diagonalised by plane
waves with frequencies omega_k = sqrt(1 - alpha cos(2 pi k / N)).
"""

import logging
from typing import Optional, Sequence, Tuple

import numpy as np

from domain.shared import InvalidArgumentException
from domain.gaussian import CovarianceMatrix
from .value_objects import ChainParams, Correlations

logger = logging.getLogger(__name__)


def _frequencies(n_sites: int, alpha: float) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(n_sites) / n_sites
    return np.sqrt(1.0 - alpha * np.cos(theta))


def dispersion(params: ChainParams, k: int) -> float:
    if isinstance(k, bool) or int(k) != k or not 0 <= int(k) < params.n_sites:
        raise InvalidArgumentException(
            "k", f"Mode index must lie in 0..{params.n_sites - 1}, got {k!r}"
        )
    theta = 2.0 * np.pi * int(k) / params.n_sites
    return float(np.sqrt(1.0 - params.alpha * np.cos(theta)))


def mode_sums(n_sites: int, alpha: float) -> Tuple[np.ndarray, np.ndarray]:
    """Direct cosine sums g_r and h_r for r = 0..n_sites-1.

    No ChainParams restriction applies, so the two-site chain used by the Fock
    comparison is reachable here.
    """
    if n_sites < 1:
        raise InvalidArgumentException("n_sites", "Need at least one site")
    if not 0.0 <= alpha < 1.0:
        raise InvalidArgumentException("alpha", f"alpha must lie in [0, 1), got {alpha!r}")

    omega_k = _frequencies(n_sites, alpha)
    theta = 2.0 * np.pi * np.arange(n_sites) / n_sites
    cosines = np.cos(np.outer(np.arange(n_sites), theta))

    g = cosines @ (0.5 / omega_k) / n_sites
    h = cosines @ (0.5 * omega_k) / n_sites

    # r and N - r are the same sum in a different order; pin them to one value
    mirror = np.roll(np.arange(n_sites)[::-1], 1)
    return 0.5 * (g + g[mirror]), 0.5 * (h + h[mirror])


def build_correlations(params: ChainParams) -> Correlations:
    g, h = mode_sums(params.n_sites, params.alpha)
    epsilon = h[0] + g[0] - params.alpha * g[1]
    logger.debug(
        f"Mode sums for N={params.n_sites} alpha={params.alpha}: "
        f"g0={g[0]:.10g} g1={g[1]:.10g} h0={h[0]:.10g}"
    )
    return Correlations(g, h, epsilon, params.alpha)


def resolve_correlations(params: ChainParams, correlations: Optional[Correlations]) -> Correlations:
    if correlations is None:
        return build_correlations(params)
    if correlations.n_sites != params.n_sites or correlations.alpha != params.alpha:
        raise InvalidArgumentException(
            "correlations",
            f"Correlations for N={correlations.n_sites}, alpha={correlations.alpha} "
            f"do not belong to N={params.n_sites}, alpha={params.alpha}",
        )
    return correlations


def correlation_submatrices(
    params: ChainParams,
    row_sites: Sequence[int],
    col_sites: Sequence[int],
    correlations: Optional[Correlations] = None,
) -> Tuple[np.ndarray, np.ndarray]:
    """(G-block, H-block) between two site lists"""
    rows = np.array([params.check_site(s, "row_sites") for s in row_sites], dtype=int)
    cols = np.array([params.check_site(s, "col_sites") for s in col_sites], dtype=int)
    corr = resolve_correlations(params, correlations)

    distance = np.subtract.outer(rows, cols) % params.n_sites
    return corr.g[distance], corr.h[distance]


def ground_covariance(params: ChainParams, correlations: Optional[Correlations] = None) -> CovarianceMatrix:
    sites = range(params.n_sites)
    g_block, h_block = correlation_submatrices(params, sites, sites, correlations)
    return CovarianceMatrix.from_blocks(g_block, h_block)
