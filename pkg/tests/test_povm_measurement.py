import numpy as np
import pytest

from domain.chain import ChainParams, ground_covariance
from domain.gaussian import symplectic_eigenvalues
from domain.measurement import (
    MeasurementSpec,
    OutcomeDistribution,
    build_m_matrix,
    outcome_distribution,
    post_measurement_covariance,
    sample_outcomes,
)
from domain.oracle import general_dyne_update
from domain.shared import InvalidArgumentException, NumericalFailureException

from conftest import G0


def test_decoupled_m_matrix(decoupled_chain):
    spec = MeasurementSpec.from_params(decoupled_chain, [0])
    assert np.allclose(build_m_matrix(decoupled_chain, spec), 0.5 * np.eye(3), atol=1e-15)


@pytest.mark.parametrize("sites", [[0], [0, 1, 2], [1, 5]])
def test_m_matrix_is_symmetric(sites):
    params = ChainParams(12, 0.99)
    m_matrix = build_m_matrix(params, MeasurementSpec.from_params(params, sites))
    assert np.max(np.abs(m_matrix - m_matrix.T)) < 1e-12


def test_m_matrix_matches_general_dyne(small_chain):
    spec = MeasurementSpec.from_params(small_chain, [0])
    state = post_measurement_covariance(small_chain, spec)
    update = general_dyne_update(ground_covariance(small_chain), [0], 1.0)

    assert np.max(np.abs(update.conditional_covariance.pp_block - state.m_matrix)) < 1e-10


def test_vacuum_is_unchanged_by_the_measurement(decoupled_chain):
    state = post_measurement_covariance(decoupled_chain, MeasurementSpec.from_params(decoupled_chain, [0, 1]))
    assert np.allclose(state.covariance.entries, 0.5 * np.eye(8), atol=1e-15)


@pytest.mark.parametrize("omega", [0.5, 1.0, 2.0])
def test_post_measurement_structure(omega):
    params = ChainParams(12, 0.9, omega)
    spec = MeasurementSpec.leading_block(params, 2)
    state = post_measurement_covariance(params, spec)
    V = state.covariance

    for site in spec.measured_sites:
        assert np.allclose(V.block([site], [site]), np.diag([0.5 / omega, 0.5 * omega]))
    assert np.all(V.block(spec.measured_sites, state.unmeasured_sites) == 0.0)

    rest = state.unmeasured_covariance()
    assert np.allclose(rest.qq_block @ rest.pp_block, 0.25 * np.eye(len(state.unmeasured_sites)), atol=1e-10)
    assert np.allclose(symplectic_eigenvalues(rest).values, 0.5, atol=1e-8)


def test_outcome_distribution(decoupled_chain, small_chain):
    dist = outcome_distribution(decoupled_chain, MeasurementSpec.from_params(decoupled_chain, [0, 2]))
    assert np.allclose(dist.x_covariance, np.eye(2))
    assert np.allclose(dist.p_covariance, np.eye(2))

    dist = outcome_distribution(small_chain, MeasurementSpec.from_params(small_chain, [0]))
    assert dist.x_covariance[0, 0] == pytest.approx(G0 + 0.5, abs=1e-7)
    assert np.array_equal(dist.means, [0.0])


def test_sampling_is_deterministic(small_chain):
    dist = outcome_distribution(small_chain, MeasurementSpec.from_params(small_chain, [0, 1]))
    first = sample_outcomes(dist, 42, 100)
    second = sample_outcomes(dist, 42, 100)

    assert first[0].shape == (100, 2)
    assert np.array_equal(first[0], second[0])
    assert np.array_equal(first[1], second[1])
    assert not np.array_equal(first[0], sample_outcomes(dist, 43, 100)[0])


@pytest.mark.parametrize("alpha, expected", [(0.0, 1.0), (0.9, G0 + 0.5)])
def test_sample_covariance(alpha, expected):
    params = ChainParams(4, alpha)
    dist = outcome_distribution(params, MeasurementSpec.from_params(params, [0]))
    x, p = sample_outcomes(dist, 7, 100_000)

    assert np.var(x) == pytest.approx(expected, rel=0.05)
    assert abs(x.mean()) < 4 * np.sqrt(expected / len(x))
    assert abs(p.mean()) < 4 * np.sqrt(dist.p_covariance[0, 0] / len(p))


def test_sampling_rejects_bad_inputs():
    with pytest.raises(InvalidArgumentException):
        sample_outcomes(OutcomeDistribution(np.eye(1), np.eye(1)), 0, 0)
    with pytest.raises(NumericalFailureException):
        sample_outcomes(OutcomeDistribution(-np.eye(1), np.eye(1)), 0, 10)


@pytest.mark.parametrize("sites", [[], [0, 0], [4], [0, 1, 2, 3]])
def test_measurement_spec_validation(small_chain, sites):
    with pytest.raises(InvalidArgumentException):
        MeasurementSpec.from_params(small_chain, sites)


def test_measurement_omega_must_match_chain(small_chain):
    with pytest.raises(InvalidArgumentException):
        build_m_matrix(small_chain, MeasurementSpec([0], omega=2.0))


def test_leading_block_range():
    params = ChainParams(10, 0.9)
    assert MeasurementSpec.leading_block(params, 3).measured_sites == tuple(range(7))
    with pytest.raises(InvalidArgumentException):
        MeasurementSpec.leading_block(params, 4)
    with pytest.raises(InvalidArgumentException):
        MeasurementSpec.leading_block(params, 0)
