import asyncio

import numpy as np
import pytest

from application.services import ExperimentService
from domain.chain import AlphaPreset, ChainParams, build_correlations
from domain.experiments import RunConfig, RunMode, SweepTable
from domain.protocol import run_setting1
from domain.shared import FitException, InvalidArgumentException
from infrastructure.cache import MemoryCacheManager
from infrastructure.repositories import CachedCorrelationRepository


@pytest.fixture
def service():
    repo = CachedCorrelationRepository(MemoryCacheManager())
    return ExperimentService(repo, max_workers=4)


def test_setting1_rows_follow_the_grid(service):
    config = RunConfig(RunMode.SETTING1, n_sites=40, alpha=0.95, d_min=0, d_max=12)
    table = asyncio.run(service.sweep_setting1(config))

    assert len(table) == 13
    assert table.completed
    assert np.array_equal(table.column("d"), np.arange(13))
    assert np.all(table.column("E_B_opt") < 0.0)
    assert np.all(table.column("delta_E_N") >= -1e-10)
    assert table.column("delta_E_N")[0] > 0.0
    assert np.all(np.abs(table.column("delta_E_N")[1:]) < 1e-10)

    params = ChainParams(40, 0.95)
    direct = run_setting1(params, 7, build_correlations(params))
    assert table.as_dicts()[7]["E_B_opt"] == direct.optimized_energy


def test_sweeps_are_deterministic(service):
    config = RunConfig(RunMode.SETTING2, n_sites=24, alpha=0.99)
    first = asyncio.run(service.sweep(config))
    second = asyncio.run(ExperimentService(CachedCorrelationRepository(MemoryCacheManager()), 1).sweep(config))

    assert first.rows == second.rows


def test_setting2_sweep_and_checks(service):
    config = RunConfig(RunMode.SETTING2, n_sites=100, alpha=0.9)
    result = asyncio.run(service.run(config))

    assert list(result.table.column("ell")) == list(range(1, 49))
    assert result.fits == []
    assert [c.name for c in result.checks] == ["ratio_monotone", "ratio_max_at_largest_ell", "ratio_below_one"]
    assert all(c.passed for c in result.checks)


def test_setting2_checks_flag_a_bad_table(service):
    table = SweepTable("setting2", ("ell", "delta_E_N", "E_B_abs", "ratio"))
    for ell, ratio in ((1, 0.2), (2, 0.5), (3, 0.4)):
        table.record({"ell": ell, "delta_E_N": 1.0, "E_B_abs": ratio, "ratio": ratio})

    verdicts = {c.name: c.passed for c in service.setting2_checks(table)}
    assert verdicts == {"ratio_monotone": False, "ratio_max_at_largest_ell": False, "ratio_below_one": True}


def test_size_sweep_fits_and_plateaus(service):
    config = RunConfig(
        RunMode.SIZE_SWEEP, alpha=1 - 1e-7, n_list=(40, 20, 30, 50), fit_window=(20, 50)
    )
    result = asyncio.run(service.run(config))

    assert list(result.table.column("N")) == [40, 20, 30, 50]
    assert [f.quantity for f in result.fits] == ["delta_E_N", "E_B_abs", "beta"]
    assert [f.has_offset for f in result.fits] == [False, True, False]
    assert [name for name, _ in result.plateaus] == ["delta_E_N", "E_B_abs"]
    assert all(change >= 0.0 for _, change in result.plateaus)


def test_setting1_fits_with_omega_sensitivity(service):
    config = RunConfig(
        RunMode.SETTING1, n_sites=60, alpha=0.99, d_max=20, fit_window=(5, 20), omega_sensitivity=(2.0,)
    )
    result = asyncio.run(service.run(config))

    assert [f.quantity for f in result.fits] == ["E_B_abs", "delta_S_M", "E_B_abs@omega=2", "delta_S_M@omega=2"]
    assert all(f.exponent < 0 for f in result.fits)
    assert all(f.window == (5.0, 20.0) for f in result.fits)
    # omega only rescales E_B, so the slope is unchanged
    energy, mutual, shifted_energy, shifted_mutual = result.fits
    assert shifted_energy.exponent == pytest.approx(energy.exponent, abs=1e-9)
    assert shifted_energy.amplitude != pytest.approx(energy.amplitude, rel=1e-3)
    assert shifted_mutual.exponent == pytest.approx(mutual.exponent, abs=1e-9)


def test_fit_skipped_when_window_misses_the_sweep(service):
    config = RunConfig(RunMode.SETTING1, n_sites=20, d_max=8, fit_window=(10, 40))
    result = asyncio.run(service.run(config))
    assert result.fits == []


def test_sweep_requires_matching_mode(service):
    with pytest.raises(InvalidArgumentException):
        asyncio.run(service.sweep_setting2(RunConfig(RunMode.SETTING1, n_sites=20, d_max=5)))
    with pytest.raises(InvalidArgumentException):
        asyncio.run(service.sweep(RunConfig(RunMode.VALIDATE)))


def test_failing_sensitivity_refit_is_skipped(service, monkeypatch):
    from application.services import experiment_service

    real_fit = experiment_service.fit_power_law

    def fit(points, with_offset=False, window=None, quantity="y"):
        if quantity == "E_B_abs@omega=2":
            raise FitException(quantity, "no positive residuals")
        return real_fit(points, with_offset=with_offset, window=window, quantity=quantity)

    monkeypatch.setattr(experiment_service, "fit_power_law", fit)
    config = RunConfig(
        RunMode.SETTING1, n_sites=60, alpha=0.99, d_max=20, fit_window=(5, 20), omega_sensitivity=(2.0,)
    )
    result = asyncio.run(service.run(config))

    assert [f.quantity for f in result.fits] == ["E_B_abs", "delta_S_M", "delta_S_M@omega=2"]
    assert len(result.table) == 21


def test_nominal_fit_failure_still_raises(service, monkeypatch):
    from application.services import experiment_service

    def fit(points, with_offset=False, window=None, quantity="y"):
        raise FitException(quantity, "no positive residuals")

    monkeypatch.setattr(experiment_service, "fit_power_law", fit)
    config = RunConfig(RunMode.SETTING1, n_sites=60, alpha=0.99, d_max=20, fit_window=(5, 20))
    table = asyncio.run(service.sweep(config))
    with pytest.raises(FitException):
        service.summarize(config, table)


@pytest.mark.parametrize("preset", list(AlphaPreset))
def test_size_sweep_never_gains_negativity(service, preset):
    table = asyncio.run(service.sweep_size(RunConfig(RunMode.SIZE_SWEEP, alpha=preset.alpha)))
    assert np.all(table.column("delta_E_N") >= 0.0), table.column("delta_E_N")
