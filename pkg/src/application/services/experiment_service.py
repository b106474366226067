"""Experiment service"""

import asyncio
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from domain.chain import ChainParams, CorrelationRepository
from domain.protocol import QetReport, run_setting1, run_setting2
from domain.experiments import (
    PowerLawFit,
    RunConfig,
    RunMode,
    SweepTable,
    SweepCompletedEvent,
    ValidationResult,
    SETTING1_COLUMNS,
    SETTING2_COLUMNS,
    SIZE_SWEEP_COLUMNS,
    fit_power_law,
    MIN_FIT_POINTS,
)
from domain.shared import FitException, InvalidArgumentException

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# (column, with_offset) fitted per sweep
SETTING1_FITS = (("E_B_abs", False), ("delta_S_M", False))
SIZE_SWEEP_FITS = (("delta_E_N", False), ("E_B_abs", True), ("beta", False))
PLATEAU_COLUMNS = ("delta_E_N", "E_B_abs")
MONOTONE_SLACK = 1e-12


@dataclass
class ExperimentResult:
    """Table of the nominal run plus everything the summary prints"""

    table: SweepTable
    fits: List[PowerLawFit] = field(default_factory=list)
    checks: List[ValidationResult] = field(default_factory=list)
    plateaus: List[Tuple[str, float]] = field(default_factory=list)


class ExperimentService:
    """Runs the sweeps; sweep points are evaluated concurrently and kept in grid order"""

    def __init__(self, correlation_repo: CorrelationRepository, max_workers: Optional[int] = None):
        self._correlation_repo = correlation_repo
        self._max_workers = max_workers

    async def _map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self._max_workers) as executor:
            futures = [loop.run_in_executor(executor, fn, item) for item in items]
            return list(await asyncio.gather(*futures))

    def _record(self, table: SweepTable, rows: Sequence[dict]) -> SweepTable:
        for row in rows:
            table.record(row)
        table.complete()
        for event in table.pull_domain_events():
            if isinstance(event, SweepCompletedEvent):
                logger.info(f"Sweep {event.table!r} completed with {event.n_rows} rows")
            else:
                logger.debug(f"{event}")
        return table

    async def sweep_setting1(self, config: RunConfig) -> SweepTable:
        self._require(config, RunMode.SETTING1)
        params = config.params
        correlations = await self._correlation_repo.get(params)
        logger.info(
            f"Setting 1 sweep: N={params.n_sites} alpha={params.alpha} omega={params.omega} "
            f"d={config.d_range.start}..{config.d_range.stop - 1}"
        )

        reports = await self._map(lambda d: run_setting1(params, d, correlations), config.d_range)
        rows = [self._setting1_row(d, r) for d, r in zip(config.d_range, reports)]
        return self._record(SweepTable("setting1", SETTING1_COLUMNS), rows)

    async def sweep_setting2(self, config: RunConfig) -> SweepTable:
        self._require(config, RunMode.SETTING2)
        params = config.params
        correlations = await self._correlation_repo.get(params)
        logger.info(
            f"Setting 2 sweep: N={params.n_sites} alpha={params.alpha} omega={params.omega} "
            f"ell={config.ell_range.start}..{config.ell_range.stop - 1}"
        )

        reports = await self._map(lambda ell: run_setting2(params, ell, correlations), config.ell_range)
        rows = [
            {"ell": ell, "delta_E_N": r.delta_log_negativity, "E_B_abs": r.energy_magnitude, "ratio": r.ratio}
            for ell, r in zip(config.ell_range, reports)
        ]
        return self._record(SweepTable("setting2", SETTING2_COLUMNS), rows)

    async def sweep_size(self, config: RunConfig) -> SweepTable:
        self._require(config, RunMode.SIZE_SWEEP)
        chains = [ChainParams(n, config.alpha, config.omega) for n in config.n_list]
        logger.info(f"Size sweep: N={list(config.n_list)} alpha={config.alpha} omega={config.omega}")

        correlations = await asyncio.gather(*(self._correlation_repo.get(p) for p in chains))
        reports = await self._map(
            lambda item: run_setting2(item[0], item[0].max_ell, item[1]), zip(chains, correlations)
        )
        rows = [
            {"N": p.n_sites, "delta_E_N": r.delta_log_negativity, "E_B_abs": r.energy_magnitude, "beta": r.ratio}
            for p, r in zip(chains, reports)
        ]
        return self._record(SweepTable("size-sweep", SIZE_SWEEP_COLUMNS), rows)

    async def sweep(self, config: RunConfig) -> SweepTable:
        if config.mode is RunMode.SETTING1:
            return await self.sweep_setting1(config)
        if config.mode is RunMode.SETTING2:
            return await self.sweep_setting2(config)
        if config.mode is RunMode.SIZE_SWEEP:
            return await self.sweep_size(config)
        raise InvalidArgumentException("mode", f"{config.mode} is not a sweep")

    def fit_table(
        self, config: RunConfig, table: SweepTable, suffix: str = "", skip_failures: bool = False
    ) -> List[PowerLawFit]:
        """Power laws of the sweep columns inside the configured window.

        With ``skip_failures`` a quantity that cannot be fitted is logged and left out
        instead of raising FitException.
        """
        if config.fit_window is None:
            return []
        if config.mode is RunMode.SETTING1:
            x = table.column("d")
            columns = {"E_B_abs": np.abs(table.column("E_B_opt")), "delta_S_M": table.column("delta_S_M")}
            specs = SETTING1_FITS
        elif config.mode is RunMode.SIZE_SWEEP:
            x = table.column("N")
            columns = {name: table.column(name) for name, _ in SIZE_SWEEP_FITS}
            specs = SIZE_SWEEP_FITS
        else:
            return []

        lo, hi = config.fit_window
        inside = int(np.count_nonzero((x >= lo) & (x <= hi)))
        if inside < MIN_FIT_POINTS:
            logger.warning(f"Only {inside} sweep points inside the fit window [{lo:g}, {hi:g}]; skipping fits")
            return []

        fits = []
        for name, with_offset in specs:
            quantity = f"{name}{suffix}"
            try:
                fit = fit_power_law(
                    np.column_stack((x, columns[name])),
                    with_offset=with_offset,
                    window=config.fit_window,
                    quantity=quantity,
                )
            except FitException as e:
                if not skip_failures:
                    raise
                logger.warning(f"Skipping fit of {quantity}: {e.message}")
                continue
            logger.info(
                f"Fit {quantity}: amplitude={fit.amplitude:.6g} exponent={fit.exponent:.6g} "
                f"offset={fit.offset} r2={fit.r_squared:.6f}"
            )
            fits.append(fit)
        return fits

    def setting2_checks(self, table: SweepTable) -> List[ValidationResult]:
        """Ratio shape of a setting 2 sweep: monotone, maximal at the largest block, below 1"""
        ells = table.column("ell")
        ratio = table.column("ratio")
        finite = np.isfinite(ratio)
        if not finite.all():
            logger.warning(f"Setting 2: {int((~finite).sum())} rows with no negativity change")
        monotone = bool(finite.all() and np.all(np.diff(ratio) >= -MONOTONE_SLACK * np.abs(ratio[:-1])))
        argmax = int(ells[np.nanargmax(ratio)]) if finite.any() else -1
        bounded = bool(finite.all() and np.all(ratio < 1.0))
        largest = float(np.nanmax(ratio)) if finite.any() else math.nan
        return [
            ValidationResult("ratio_monotone", monotone, f"{len(ratio)} rows"),
            ValidationResult("ratio_max_at_largest_ell", argmax == int(ells[-1]), f"argmax ell={argmax}"),
            ValidationResult("ratio_below_one", bounded, f"max ratio={largest:.6g}"),
        ]

    def plateaus(self, table: SweepTable) -> List[Tuple[str, float]]:
        """Relative change of each column between the two largest N"""
        if len(table) < 2:
            return []
        order = np.argsort(table.column("N"))
        result = []
        for name in PLATEAU_COLUMNS:
            values = table.column(name)[order]
            previous, last = values[-2], values[-1]
            change = abs(last - previous) / abs(previous) if previous != 0 else math.inf
            result.append((name, float(change)))
        return result

    def summarize(self, config: RunConfig, table: SweepTable) -> ExperimentResult:
        """Fits, checks and plateaus of a finished nominal sweep"""
        result = ExperimentResult(table=table, fits=self.fit_table(config, table))
        if config.mode is RunMode.SETTING2:
            result.checks = self.setting2_checks(table)
        if config.mode is RunMode.SIZE_SWEEP:
            result.plateaus = self.plateaus(table)
        return result

    async def sensitivity_fits(self, config: RunConfig) -> List[PowerLawFit]:
        """Refits at each extra omega; a refit that fails is skipped"""
        fits = []
        for omega in config.omega_sensitivity:
            shifted = config.with_omega(omega)
            logger.info(f"Omega sensitivity: rerunning at omega={omega:g}")
            shifted_table = await self.sweep(shifted)
            fits.extend(self.fit_table(shifted, shifted_table, suffix=f"@omega={omega:g}", skip_failures=True))
        return fits

    async def run(self, config: RunConfig) -> ExperimentResult:
        result = self.summarize(config, await self.sweep(config))
        result.fits.extend(await self.sensitivity_fits(config))
        return result

    @staticmethod
    def _require(config: RunConfig, mode: RunMode) -> None:
        if config.mode is not mode:
            raise InvalidArgumentException("mode", f"Expected a {mode} configuration, got {config.mode}")

    @staticmethod
    def _setting1_row(d: int, report: QetReport) -> dict:
        return {
            "d": d,
            "E_B_opt": report.optimized_energy,
            "E_N_before": report.e_n_before,
            "E_N_after": report.e_n_after,
            "delta_E_N": report.delta_log_negativity,
            "S_M_before": report.s_m_before,
            "S_M_after": report.s_m_after,
            "delta_S_M": report.delta_mutual_information,
        }
