"""Energy extraction at a target site from the outcomes of a POVM elsewhere.

After the measurement the target B is displaced, p_B -> p_B + theta.P and
q_B -> q_B + phi.X. Averaged over outcomes, the change of the chain energy is a
quadratic form in (theta, phi) whose minimum is the extracted energy.
"""

import logging
from typing import Optional

import numpy as np
from scipy.linalg import LinAlgError, cho_solve, cholesky, solve_triangular

from domain.shared import (
    BusinessRuleViolationException,
    InvalidArgumentException,
    NumericalFailureException,
)
from domain.chain import ChainParams, Correlations, correlation_submatrices, ground_covariance, resolve_correlations
from domain.gaussian import log_negativity, mutual_information, reduce
from domain.measurement import MeasurementSpec, post_measurement_covariance, spd_factor
from .value_objects import DisplacementPlan, QetQuadratics, QetReport

logger = logging.getLogger(__name__)


def build_quadratics(
    params: ChainParams,
    spec: MeasurementSpec,
    target_site: int,
    correlations: Optional[Correlations] = None,
) -> QetQuadratics:
    spec.validate_for(params)
    target = params.check_site(target_site, "target_site")
    if spec.contains(target):
        raise InvalidArgumentException(
            "target_site", f"Target site {target} is one of the measured sites"
        )
    corr = resolve_correlations(params, correlations)
    measured = spec.measured_sites
    n = params.n_sites
    identity = np.eye(spec.size)

    g_aa, h_aa = correlation_submatrices(params, measured, measured, corr)
    t_p = h_aa + 0.5 * spec.omega * identity
    t_q = g_aa + (0.5 / spec.omega) * identity

    offsets = np.asarray(measured, dtype=int) - target
    j_p = corr.h[offsets % n]
    j_q = corr.g[offsets % n] - 0.5 * params.alpha * (
        corr.g[(offsets + 1) % n] + corr.g[(offsets - 1) % n]
    )
    return QetQuadratics(t_p, t_q, j_p, j_q)


def optimal_plan(quadratics: QetQuadratics) -> DisplacementPlan:
    """theta = -T_p^-1 J_p, phi = -T_q^-1 J_q"""
    if quadratics.is_trivial:
        return DisplacementPlan.zero(quadratics.size)
    theta = -cho_solve(spd_factor(quadratics.t_p, "optimal_plan"), quadratics.j_p)
    phi = -cho_solve(spd_factor(quadratics.t_q, "optimal_plan"), quadratics.j_q)
    return DisplacementPlan(theta, phi)


def _whitened_norm(t: np.ndarray, j: np.ndarray) -> float:
    """j.T^-1.j via the Cholesky factor, non-negative by construction"""
    try:
        factor = cholesky(t, lower=True)
    except LinAlgError as e:
        raise NumericalFailureException("optimized_energy", f"Matrix is not positive definite: {e}") from e
    y = solve_triangular(factor, j, lower=True)
    return float(y @ y)


def optimized_energy(quadratics: QetQuadratics) -> float:
    """-J_p.T_p^-1.J_p / 2 - J_q.T_q^-1.J_q / 2"""
    if quadratics.is_trivial:
        return 0.0
    return -0.5 * _whitened_norm(quadratics.t_p, quadratics.j_p) - 0.5 * _whitened_norm(
        quadratics.t_q, quadratics.j_q
    )


def plan_energy(quadratics: QetQuadratics, plan: DisplacementPlan) -> float:
    """Outcome-averaged energy change at the target for an arbitrary plan"""
    if plan.size != quadratics.size:
        raise InvalidArgumentException(
            "plan", f"Plan has {plan.size} weights, the measurement has {quadratics.size} sites"
        )
    theta, phi = plan.theta, plan.phi
    return float(
        0.5 * theta @ quadratics.t_p @ theta
        + quadratics.j_p @ theta
        + 0.5 * phi @ quadratics.t_q @ phi
        + quadratics.j_q @ phi
    )


def _run(
    params: ChainParams,
    spec: MeasurementSpec,
    target: int,
    correlations: Correlations,
    a_sites: list,
) -> QetReport:
    b_sites = [target]
    before = ground_covariance(params, correlations)
    after = post_measurement_covariance(params, spec, correlations).covariance

    if len(a_sites) + 1 == params.n_sites:
        # A:B covers the chain, the negativity needs no reduction
        e_n_before = log_negativity(before, b_sites)
        e_n_after = log_negativity(after, b_sites)
    else:
        order = a_sites + b_sites
        b_local = [len(a_sites)]
        e_n_before = log_negativity(reduce(before, order), b_local)
        e_n_after = log_negativity(reduce(after, order), b_local)

    s_m_before = mutual_information(before, a_sites, b_sites)
    s_m_after = mutual_information(after, a_sites, b_sites)

    quadratics = build_quadratics(params, spec, target, correlations)
    plan = optimal_plan(quadratics)
    energy = optimized_energy(quadratics)

    logger.debug(
        f"N={params.n_sites} alpha={params.alpha} |A|={spec.size} B={target}: "
        f"E_B={energy:.6e} E_N {e_n_before:.6g}->{e_n_after:.6g} "
        f"S_M {s_m_before:.6g}->{s_m_after:.6g}"
    )
    return QetReport(
        energy, plan, e_n_before, e_n_after, s_m_before, s_m_after, target, spec.measured_sites
    )


def run_setting1(params: ChainParams, d: int, correlations: Optional[Correlations] = None) -> QetReport:
    """A = {0} measured, B = d + 1, so d sites lie strictly between them"""
    if isinstance(d, bool) or int(d) != d or d < 0:
        raise InvalidArgumentException("d", f"Separation must be a non-negative integer, got {d!r}")
    target = params.site(int(d) + 1)
    if target == 0:
        raise BusinessRuleViolationException(
            "distinct_sites", f"Separation d={d} puts B on top of A for N={params.n_sites}"
        )
    corr = resolve_correlations(params, correlations)
    spec = MeasurementSpec.from_params(params, [0])
    return _run(params, spec, target, corr, [0])


def run_setting2(params: ChainParams, ell: int, correlations: Optional[Correlations] = None) -> QetReport:
    """Sites 0..2*ell measured, B = N/2 + ell, A = every site but B"""
    spec = MeasurementSpec.leading_block(params, ell)
    target = params.n_sites // 2 + int(ell)
    corr = resolve_correlations(params, correlations)
    a_sites = [s for s in range(params.n_sites) if s != target]
    return _run(params, spec, target, corr, a_sites)
