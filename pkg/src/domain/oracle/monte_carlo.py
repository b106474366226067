"""Sampled estimate of the energy a displacement plan extracts at the target.

Outcomes are drawn from the POVM statistics; for each one the target neighbourhood
is conditioned by the general-dyne update, shifted by the plan, and the bond-inclusive
target energy is evaluated exactly from conditional moments.
"""

import logging
import math
from typing import NamedTuple, Optional

import numpy as np

from domain.shared import InvalidArgumentException
from domain.chain import ChainParams, Correlations, ground_covariance, resolve_correlations
from domain.measurement import MeasurementSpec, outcome_distribution, sample_outcomes
from domain.protocol import DisplacementPlan
from .general_dyne import general_dyne_update
from .value_objects import GeneralDyneUpdate, RunningMoments

logger = logging.getLogger(__name__)

MIN_SAMPLES = 1_000
DEFAULT_BATCH_SIZE = 100_000


class EnergyEstimate(NamedTuple):
    mean: float
    standard_error: float
    n_samples: int


class _TargetEnergy:
    """Per-outcome value of (p_B^2 + q_B^2 - alpha q_B (q_{B-1} + q_{B+1}) - eps_B) / 2"""

    def __init__(
        self,
        params: ChainParams,
        spec: MeasurementSpec,
        target: int,
        plan: DisplacementPlan,
        update: GeneralDyneUpdate,
        offset: float,
    ):
        self._plan = plan
        self._offset = offset
        self._alpha = params.alpha
        self._update = update

        b = update.position_of(target)
        cov = update.conditional_covariance.entries
        self._var_q = cov[2 * b, 2 * b]
        self._var_p = cov[2 * b + 1, 2 * b + 1]

        # measured neighbours sit in coherent states centred on their X outcome
        self._measured_columns = []
        self._neighbour_cov = []
        rows = [2 * b, 2 * b + 1]
        for site in (params.site(target - 1), params.site(target + 1)):
            if spec.contains(site):
                self._measured_columns.append(spec.measured_sites.index(site))
            else:
                qn = 2 * update.position_of(site)
                self._neighbour_cov.append(cov[2 * b, qn])
                rows.append(qn)
        self._rows = rows

    def __call__(self, x: np.ndarray, p: np.ndarray) -> np.ndarray:
        outcomes = np.empty((x.shape[0], 2 * x.shape[1]))
        outcomes[:, 0::2] = x
        outcomes[:, 1::2] = p
        means = self._update.conditional_means(outcomes, self._rows)

        mu_q = means[:, 0] + x @ self._plan.phi
        mu_p = means[:, 1] + p @ self._plan.theta
        energy = self._var_q + mu_q**2 + self._var_p + mu_p**2

        for column in self._measured_columns:
            energy -= self._alpha * mu_q * x[:, column]
        for k, covariance in enumerate(self._neighbour_cov):
            energy -= self._alpha * (covariance + mu_q * means[:, 2 + k])

        return 0.5 * (energy - self._offset)


def monte_carlo_energy(
    params: ChainParams,
    spec: MeasurementSpec,
    target_site: int,
    plan: DisplacementPlan,
    n_samples: int,
    seed: int,
    correlations: Optional[Correlations] = None,
    batch_size: int = DEFAULT_BATCH_SIZE,
) -> EnergyEstimate:
    spec.validate_for(params)
    target = params.check_site(target_site, "target_site")
    if spec.contains(target):
        raise InvalidArgumentException("target_site", f"Target site {target} is measured")
    if plan.size != spec.size:
        raise InvalidArgumentException(
            "plan", f"Plan has {plan.size} weights, the measurement has {spec.size} sites"
        )
    if n_samples < MIN_SAMPLES:
        raise InvalidArgumentException("n_samples", f"Need at least {MIN_SAMPLES} samples, got {n_samples}")
    if batch_size < 1:
        raise InvalidArgumentException("batch_size", "batch_size must be positive")

    corr = resolve_correlations(params, correlations)
    update = general_dyne_update(ground_covariance(params, corr), spec.measured_sites, spec.omega)
    evaluate = _TargetEnergy(params, spec, target, plan, update, corr.site_energy_offset)

    measured_neighbours = [s for s in (params.site(target - 1), params.site(target + 1)) if spec.contains(s)]
    if measured_neighbours:
        logger.warning(
            f"Target {target} has measured neighbours {measured_neighbours}; "
            "the sampled energy includes their outcome noise"
        )

    dist = outcome_distribution(params, spec, corr)
    n_batches = math.ceil(n_samples / batch_size)
    sizes = [batch_size] * (n_batches - 1) + [n_samples - batch_size * (n_batches - 1)]
    moments = RunningMoments()
    for child, size in zip(np.random.SeedSequence(seed).spawn(n_batches), sizes):
        x, p = sample_outcomes(dist, child, size)
        moments = moments.merge(RunningMoments.from_samples(evaluate(x, p)))

    logger.debug(
        f"Monte Carlo at B={target}: {moments.mean:.6e} +- {moments.standard_error:.2e} "
        f"({moments.count} samples, {n_batches} batches)"
    )
    return EnergyEstimate(moments.mean, moments.standard_error, moments.count)
