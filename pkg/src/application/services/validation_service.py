"""Validation service: the invariant and oracle suite behind the ``validate`` command"""

import asyncio
import logging
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Callable, List, Optional

import numpy as np

from domain.chain import (
    AlphaPreset,
    ChainParams,
    CorrelationRepository,
    Correlations,
    build_correlations,
    correlation_submatrices,
    ground_covariance,
)
from domain.gaussian import log_negativity, symplectic_eigenvalues
from domain.measurement import MeasurementSpec, post_measurement_covariance
from domain.protocol import build_quadratics, optimal_plan, optimized_energy, run_setting1
from domain.oracle import (
    fock_ground_state,
    fock_log_negativity,
    general_dyne_update,
    monte_carlo_energy,
    two_site_covariance,
)
from domain.experiments import ValidationResult
from domain.shared import DomainException

logger = logging.getLogger(__name__)

PRESET_ALPHAS = tuple(p.alpha for p in AlphaPreset)
GH_GRID_SITES = (4, 10, 100)
ORACLE_GRID_SITES = (4, 6, 8, 12)
ORACLE_GRID_ALPHAS = (0.0, 0.5, 0.9, 0.99)
ORACLE_GRID_OMEGAS = (0.5, 1.0, 2.0)
MC_SITES = 100
MC_ALPHA = 0.9
MC_SEPARATIONS = (1, 2, 5)
MC_SLACK = 1e-12
PERTURBATION = 1.1


def check_gh_identity() -> ValidationResult:
    worst = 0.0
    for n in GH_GRID_SITES:
        for alpha in (0.0,) + PRESET_ALPHAS:
            params = ChainParams(n, alpha)
            g, h = correlation_submatrices(params, range(n), range(n))
            worst = max(worst, float(np.max(np.abs(g @ h - 0.25 * np.eye(n)))))
    return ValidationResult("gh_identity", worst < 1e-10, f"max |GH - I/4| = {worst:.2e}")


def check_virial(seed: int, draws: int = 25) -> ValidationResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(draws):
        params = ChainParams(2 * int(rng.integers(2, 101)), float(rng.uniform(0.0, 0.999)))
        corr = build_correlations(params)
        worst = max(worst, abs(corr.h[0] - (corr.g[0] - params.alpha * corr.g[1])))
    return ValidationResult("virial", worst < 1e-12, f"max |h0 - g0 + alpha g1| = {worst:.2e} over {draws} draws")


def check_ground_purity() -> ValidationResult:
    worst = 0.0
    for n in GH_GRID_SITES:
        for alpha in PRESET_ALPHAS:
            spectrum = symplectic_eigenvalues(ground_covariance(ChainParams(n, alpha)))
            worst = max(worst, float(np.max(np.abs(spectrum.values - 0.5))))
    return ValidationResult("ground_purity", worst < 1e-9, f"max |nu - 1/2| = {worst:.2e}")


def _oracle_grid():
    for n in ORACLE_GRID_SITES:
        for alpha in ORACLE_GRID_ALPHAS:
            for omega in ORACLE_GRID_OMEGAS:
                params = ChainParams(n, alpha, omega)
                yield params, MeasurementSpec.from_params(params, [0])
                if params.max_ell >= 1:
                    yield params, MeasurementSpec.leading_block(params, 1)


def check_post_measurement_purity() -> ValidationResult:
    worst = 0.0
    for params, spec in _oracle_grid():
        state = post_measurement_covariance(params, spec)
        spectrum = symplectic_eigenvalues(state.unmeasured_covariance())
        worst = max(worst, float(np.max(np.abs(spectrum.values - 0.5))))
    return ValidationResult("post_measurement_purity", worst < 1e-8, f"max |nu - 1/2| = {worst:.2e}")


def check_general_dyne() -> ValidationResult:
    worst = 0.0
    cases = 0
    for params, spec in _oracle_grid():
        update = general_dyne_update(ground_covariance(params), spec.measured_sites, spec.omega)
        expected = post_measurement_covariance(params, spec).unmeasured_covariance()
        worst = max(worst, float(np.max(np.abs(update.conditional_covariance.entries - expected.entries))))
        cases += 1
    return ValidationResult("general_dyne_equivalence", worst < 1e-10, f"max deviation {worst:.2e} over {cases} cases")


def check_fock_negativity(cutoff: int, alpha: float = MC_ALPHA) -> ValidationResult:
    fock = fock_log_negativity(fock_ground_state(alpha, cutoff))
    gaussian = log_negativity(two_site_covariance(alpha), [1])
    gap = abs(fock - gaussian)
    return ValidationResult(
        "fock_negativity", gap < 1e-3, f"Fock {fock:.6f} vs Gaussian {gaussian:.6f} at cutoff {cutoff}"
    )


def check_monte_carlo(correlations: Correlations, samples: int, seed: int) -> ValidationResult:
    params = ChainParams(MC_SITES, MC_ALPHA)
    spec = MeasurementSpec.from_params(params, [0])
    details = []
    passed = True
    for d in MC_SEPARATIONS:
        quadratics = build_quadratics(params, spec, d + 1, correlations)
        analytic = optimized_energy(quadratics)
        estimate = monte_carlo_energy(
            params, spec, d + 1, optimal_plan(quadratics), samples, seed + d, correlations
        )
        gap = abs(estimate.mean - analytic)
        ok = gap <= 3.0 * estimate.standard_error + MC_SLACK
        passed &= ok
        details.append(f"d={d}: {gap / max(estimate.standard_error, MC_SLACK):.2f} SE")
    return ValidationResult("monte_carlo_energy", passed, ", ".join(details))


def check_perturbed_plan(correlations: Correlations, samples: int, seed: int) -> ValidationResult:
    params = ChainParams(MC_SITES, MC_ALPHA)
    spec = MeasurementSpec.from_params(params, [0])
    target = MC_SEPARATIONS[0] + 1
    quadratics = build_quadratics(params, spec, target, correlations)
    optimum = optimized_energy(quadratics)
    plan = optimal_plan(quadratics).scaled(theta_factor=PERTURBATION)
    estimate = monte_carlo_energy(params, spec, target, plan, samples, seed, correlations)
    ok = estimate.mean >= optimum - 3.0 * estimate.standard_error - MC_SLACK
    return ValidationResult(
        "perturbed_plan", ok, f"perturbed {estimate.mean:.6e} +- {estimate.standard_error:.1e} vs optimum {optimum:.6e}"
    )


def check_setting1_separability(max_d: int = 5) -> ValidationResult:
    worst = 0.0
    deltas = []
    for alpha in PRESET_ALPHAS:
        params = ChainParams(MC_SITES, alpha)
        corr = build_correlations(params)
        for d in range(max_d + 1):
            report = run_setting1(params, d, corr)
            worst = max(worst, report.e_n_after)
            if d == 0:
                deltas.append(report.delta_log_negativity)
            else:
                worst = max(worst, report.e_n_before)
    growing = all(b > a for a, b in zip(deltas, deltas[1:]))
    passed = worst < 1e-10 and deltas[0] > 0 and growing
    return ValidationResult(
        "setting1_separability",
        passed,
        f"max residual E_N {worst:.1e}; delta E_N at d=0: " + ", ".join(f"{v:.4g}" for v in deltas),
    )


class ValidationService:
    """Runs every check concurrently and reports them in a fixed order"""

    def __init__(
        self,
        correlation_repo: CorrelationRepository,
        max_workers: Optional[int] = None,
        samples: int = 1_000_000,
        cutoff: int = 25,
        seed: int = 0,
    ):
        self._correlation_repo = correlation_repo
        self._max_workers = max_workers
        self._samples = samples
        self._cutoff = cutoff
        self._seed = seed

    async def _checks(self) -> List[Callable[[], ValidationResult]]:
        correlations = await self._correlation_repo.get(ChainParams(MC_SITES, MC_ALPHA))
        return [
            check_gh_identity,
            partial(check_virial, self._seed),
            check_ground_purity,
            check_post_measurement_purity,
            check_general_dyne,
            partial(check_fock_negativity, self._cutoff),
            partial(check_monte_carlo, correlations, self._samples, self._seed),
            partial(check_perturbed_plan, correlations, self._samples, self._seed),
            check_setting1_separability,
        ]

    @staticmethod
    def _guarded(check: Callable[[], ValidationResult]) -> ValidationResult:
        try:
            return check()
        except DomainException as e:
            name = getattr(check, "func", check).__name__.removeprefix("check_")
            logger.error(f"Check {name} raised: {e.message}")
            return ValidationResult(name, False, f"raised {type(e).__name__}: {e.message}")

    async def run_all(self) -> List[ValidationResult]:
        checks = await self._checks()
        logger.info(f"Running {len(checks)} validation checks")
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            results = await asyncio.gather(
                *(loop.run_in_executor(executor, self._guarded, check) for check in checks)
            )
        for result in results:
            log = logger.info if result.passed else logger.warning
            log(f"{result.name}: {result.verdict} ({result.detail})")
        return list(results)
