"""Coherent-state POVM on a subset of chain sites.

Blocks of the ground-state correlators are named after the measured (A) and
unmeasured (rest) split: ``C``/``L`` are the q/p correlators inside A, ``K`` the p
correlators from A to the rest and ``H_rest`` the p correlators among the rest.
"""

import logging
from typing import Optional, Tuple, Union

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve, cholesky

from domain.shared import InvalidArgumentException, NumericalFailureException
from domain.chain import ChainParams, Correlations, correlation_submatrices, resolve_correlations
from domain.gaussian import CovarianceMatrix
from .value_objects import MeasurementSpec, OutcomeDistribution, PostMeasurementState

logger = logging.getLogger(__name__)

SeedLike = Union[int, np.random.SeedSequence, None]


def spd_factor(matrix: np.ndarray, operation: str):
    """Cholesky factor for ``cho_solve``; a non-SPD matrix is a numerical failure"""
    try:
        return cho_factor(matrix, lower=True)
    except LinAlgError as e:
        raise NumericalFailureException(operation, f"Matrix is not positive definite: {e}") from e


def _symmetrize(matrix: np.ndarray) -> np.ndarray:
    return 0.5 * (matrix + matrix.T)


def build_m_matrix(
    params: ChainParams, spec: MeasurementSpec, correlations: Optional[Correlations] = None
) -> np.ndarray:
    """M = H_rest - K^T (L + omega/2)^-1 K over the unmeasured sites"""
    spec.validate_for(params)
    corr = resolve_correlations(params, correlations)
    measured = spec.measured_sites
    rest = spec.unmeasured_sites(params.n_sites)

    _, l_block = correlation_submatrices(params, measured, measured, corr)
    _, k_block = correlation_submatrices(params, measured, rest, corr)
    _, h_rest = correlation_submatrices(params, rest, rest, corr)

    factor = spd_factor(l_block + 0.5 * spec.omega * np.eye(spec.size), "build_m_matrix")
    m_matrix = h_rest - k_block.T @ cho_solve(factor, k_block)
    return _symmetrize(m_matrix)


def post_measurement_covariance(
    params: ChainParams, spec: MeasurementSpec, correlations: Optional[Correlations] = None
) -> PostMeasurementState:
    m_matrix = build_m_matrix(params, spec, correlations)
    rest = np.array(spec.unmeasured_sites(params.n_sites), dtype=int)
    measured = np.array(spec.measured_sites, dtype=int)

    m_factor = spd_factor(m_matrix, "post_measurement_covariance")
    qq_rest = _symmetrize(0.25 * cho_solve(m_factor, np.eye(len(rest))))

    n = params.n_sites
    entries = np.zeros((2 * n, 2 * n))
    entries[2 * measured, 2 * measured] = 0.5 / spec.omega
    entries[2 * measured + 1, 2 * measured + 1] = 0.5 * spec.omega
    entries[np.ix_(2 * rest, 2 * rest)] = qq_rest
    entries[np.ix_(2 * rest + 1, 2 * rest + 1)] = m_matrix

    logger.debug(f"Post-measurement covariance for {spec.size} measured of {n} sites")
    return PostMeasurementState(
        CovarianceMatrix(entries), m_matrix, spec.measured_sites, tuple(rest.tolist())
    )


def outcome_distribution(
    params: ChainParams, spec: MeasurementSpec, correlations: Optional[Correlations] = None
) -> OutcomeDistribution:
    spec.validate_for(params)
    measured = spec.measured_sites
    c_block, l_block = correlation_submatrices(params, measured, measured, correlations)
    identity = np.eye(spec.size)
    return OutcomeDistribution(
        c_block + (0.5 / spec.omega) * identity,
        l_block + (0.5 * spec.omega) * identity,
    )


def sample_outcomes(dist: OutcomeDistribution, seed: SeedLike, count: int) -> Tuple[np.ndarray, np.ndarray]:
    """Draw ``count`` outcomes; returns (X, P), each of shape (count, |A|).

    X is drawn before P from a single generator, so a seed fixes both streams.
    """
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise InvalidArgumentException("count", f"count must be a positive integer, got {count!r}")
    try:
        x_factor = cholesky(dist.x_covariance, lower=True)
        p_factor = cholesky(dist.p_covariance, lower=True)
    except LinAlgError as e:
        raise NumericalFailureException("sample_outcomes", f"Outcome covariance is not SPD: {e}") from e

    rng = np.random.default_rng(seed)
    x = rng.standard_normal((int(count), dist.size)) @ x_factor.T
    p = rng.standard_normal((int(count), dist.size)) @ p_factor.T
    return x, p
