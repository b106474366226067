import asyncio
from functools import partial

import pytest

from application.services import ValidationService
from application.services.validation_service import (
    check_fock_negativity,
    check_general_dyne,
    check_gh_identity,
    check_ground_purity,
    check_post_measurement_purity,
    check_virial,
)
from infrastructure.cache import MemoryCacheManager
from infrastructure.repositories import CachedCorrelationRepository


@pytest.mark.parametrize(
    "check",
    [check_gh_identity, check_ground_purity, check_post_measurement_purity, check_general_dyne],
)
def test_structural_checks_pass(check):
    result = check()
    assert result.passed, result.detail


def test_virial_check_is_seeded():
    assert check_virial(3).detail == check_virial(3).detail
    assert check_virial(3).passed


def test_small_cutoff_becomes_a_failed_check():
    service = ValidationService(CachedCorrelationRepository(MemoryCacheManager()))
    result = service._guarded(partial(check_fock_negativity, 10, alpha=0.99))

    assert not result.passed
    assert result.name == "fock_negativity"
    assert "NumericalFailureException" in result.detail


@pytest.mark.slow
def test_full_suite_passes():
    service = ValidationService(
        CachedCorrelationRepository(MemoryCacheManager()), max_workers=4, samples=50_000, cutoff=25, seed=0
    )
    results = asyncio.run(service.run_all())

    assert [r.name for r in results] == [
        "gh_identity",
        "virial",
        "ground_purity",
        "post_measurement_purity",
        "general_dyne_equivalence",
        "fock_negativity",
        "monte_carlo_energy",
        "perturbed_plan",
        "setting1_separability",
    ]
    failed = [f"{r.name}: {r.detail}" for r in results if not r.passed]
    assert not failed, failed
