"""Command-line surface: ``setting1``, ``setting2``, ``size-sweep`` and ``validate``"""

import argparse
import asyncio
import dataclasses
import logging
import sys
from typing import Any, Callable, Dict, Optional, Sequence, TextIO

from domain.chain import resolve_alpha
from domain.experiments import PowerLawFit, RunConfig, RunMode
from domain.shared import DomainException, NumericalFailureException
from application.services import ExperimentResult, ExperimentService, ValidationService
from infrastructure.config import ConfigurationException, Settings, get_settings
from infrastructure.di import CONFIG_KEYS, setup_container
from infrastructure.filesystem import CsvTableStorage, KeyValueConfigStorage

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_NUMERICAL_FAILURE = 2


class UsageError(Exception):

    def __init__(self, usage: str, message: str):
        self.usage = usage
        self.message = message
        super().__init__(message)


class _ArgumentParser(argparse.ArgumentParser):
    """Raises instead of exiting so the caller owns the exit code"""

    def error(self, message: str):
        raise UsageError(self.format_usage(), message)


def _int_list(text: str) -> tuple:
    return tuple(int(part) for part in text.replace(" ", "").split(",") if part)


def _float_list(text: str) -> tuple:
    return tuple(float(part) for part in text.replace(" ", "").split(",") if part)


def _log_level(text: str) -> str:
    level = text.strip().upper()
    if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
        raise ValueError(f"unknown log level {text!r}")
    return level


CONVERTERS: Dict[str, Callable[[str], Any]] = {
    "n": int,
    "alpha": resolve_alpha,
    "omega": float,
    "d_min": int,
    "d_max": int,
    "ell_min": int,
    "ell_max": int,
    "n_list": _int_list,
    "fit_min": float,
    "fit_max": float,
    "out": str,
    "seed": int,
    "threads": int,
    "samples": int,
    "cutoff": int,
    "omega_sensitivity": _float_list,
    "log_level": _log_level,
}


def _argtype(key: str) -> Callable[[str], Any]:
    convert = CONVERTERS[key]

    def parse(text: str):
        try:
            return convert(text)
        except (ValueError, DomainException) as e:
            raise argparse.ArgumentTypeError(getattr(e, "message", str(e)))

    parse.__name__ = key
    return parse


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    flags = common.add_argument_group("run parameters")
    flags.add_argument("--n", dest="n", type=_argtype("n"), help="chain size N (even, >= 4)")
    flags.add_argument("--alpha", type=_argtype("alpha"), help="coupling: a1..a4 or a number in [0, 1)")
    flags.add_argument("--omega", type=_argtype("omega"), help="POVM frequency (default 1.0)")
    flags.add_argument("--d-min", type=_argtype("d_min"), help="smallest separation (setting1)")
    flags.add_argument("--d-max", type=_argtype("d_max"), help="largest separation (setting1)")
    flags.add_argument("--ell-min", type=_argtype("ell_min"), help="smallest block half-width (setting2)")
    flags.add_argument("--ell-max", type=_argtype("ell_max"), help="largest block half-width (setting2)")
    flags.add_argument("--n-list", type=_argtype("n_list"), help="comma-separated sizes (size-sweep)")
    flags.add_argument("--fit-min", type=_argtype("fit_min"), help="lower abscissa of the fit window")
    flags.add_argument("--fit-max", type=_argtype("fit_max"), help="upper abscissa of the fit window")
    flags.add_argument("--omega-sensitivity", type=_argtype("omega_sensitivity"),
                       help="comma-separated extra omegas to refit at")
    flags.add_argument("--out", type=_argtype("out"), help="CSV output path")
    flags.add_argument("--seed", type=_argtype("seed"), help="random seed")
    flags.add_argument("--samples", type=_argtype("samples"), help="Monte Carlo samples (validate)")
    flags.add_argument("--cutoff", type=_argtype("cutoff"), help="Fock cutoff per mode (validate)")
    flags.add_argument("--threads", type=_argtype("threads"), help="worker threads, 0 = auto")
    flags.add_argument("--log-level", type=_argtype("log_level"), help="DEBUG, INFO, WARNING or ERROR")
    flags.add_argument("--config", help="key = value file; flags take precedence")

    parser = _ArgumentParser(prog="qetchain", description="QET protocol simulator on a periodic harmonic chain")
    subparsers = parser.add_subparsers(dest="mode", metavar="command", parser_class=_ArgumentParser)
    subparsers.required = True
    subparsers.add_parser("setting1", parents=[common], help="single-site A and B, sweep the separation d")
    subparsers.add_parser("setting2", parents=[common], help="measured block of 2*ell+1 sites, sweep ell")
    subparsers.add_parser("size-sweep", parents=[common], help="largest block, sweep the chain size N")
    subparsers.add_parser("validate", parents=[common], help="run the invariant and oracle suite")
    return parser


async def merge_values(args: argparse.Namespace, storage: KeyValueConfigStorage) -> Dict[str, Any]:
    """Config file values overridden by the flags that were given"""
    values: Dict[str, Any] = {}
    if args.config:
        for key, text in (await storage.load(args.config)).items():
            try:
                values[key] = CONVERTERS[key](text)
            except (ValueError, DomainException) as e:
                raise ConfigurationException(
                    key, f"Malformed value {text!r} for {key!r}: {getattr(e, 'message', e)}"
                ) from e
    for key in CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None:
            values[key] = value
    return values


def effective_settings(base: Settings, values: Dict[str, Any]) -> Settings:
    renamed = {"threads": "threads", "samples": "samples", "cutoff": "fock_cutoff",
               "seed": "seed", "log_level": "log_level"}
    overrides = {field: values[key] for key, field in renamed.items() if key in values}
    return dataclasses.replace(base, **overrides)


def build_run_config(mode: RunMode, values: Dict[str, Any], settings: Settings) -> RunConfig:
    default_window = {
        RunMode.SETTING1: settings.setting1_fit_window,
        RunMode.SIZE_SWEEP: settings.size_sweep_fit_window,
    }.get(mode)
    window = None
    if default_window is not None or "fit_min" in values or "fit_max" in values:
        base = default_window or (float("-inf"), float("inf"))
        window = (values.get("fit_min", base[0]), values.get("fit_max", base[1]))

    return RunConfig(
        mode,
        n_sites=values.get("n", settings.n_sites),
        alpha=values.get("alpha", settings.alpha),
        omega=values.get("omega", settings.omega),
        d_min=values.get("d_min", settings.d_min),
        d_max=values.get("d_max", settings.d_max),
        ell_min=values.get("ell_min", settings.ell_min),
        ell_max=values.get("ell_max", settings.ell_max),
        n_list=values.get("n_list", settings.n_list),
        fit_window=window,
        out=values.get("out"),
        seed=values.get("seed", settings.seed),
        samples=values.get("samples", settings.samples),
        omega_sensitivity=values.get("omega_sensitivity", settings.omega_sensitivity),
    )


def format_fit(fit: PowerLawFit) -> str:
    offset = "-" if fit.offset is None else f"{fit.offset:.6g}"
    lo, hi = fit.window
    return f"{fit.quantity} {fit.amplitude:.6g} {fit.exponent:.6g} {offset} {fit.r_squared:.6f} [{lo:g},{hi:g}]"


def print_summary(result: ExperimentResult, stream: TextIO) -> None:
    if result.fits:
        print("quantity amplitude exponent offset r2 window", file=stream)
        for fit in result.fits:
            print(format_fit(fit), file=stream)
    for name, change in result.plateaus:
        print(f"plateau {name} {change:.6g}", file=stream)
    for check in result.checks:
        print(f"check {check.name} {check.verdict} {check.detail}", file=stream)


async def _run(args: argparse.Namespace, stdout: TextIO) -> int:
    bootstrap = setup_container(get_settings())
    values = await merge_values(args, bootstrap.resolve(KeyValueConfigStorage))
    settings = effective_settings(get_settings(), values)
    logging.getLogger().setLevel(settings.log_level)

    mode = RunMode.from_string(args.mode)
    config = build_run_config(mode, values, settings)
    container = setup_container(settings)

    if mode is RunMode.VALIDATE:
        results = await container.resolve(ValidationService).run_all()
        for result in results:
            print(f"{result.name} {result.verdict} {result.detail}", file=stdout)
        failed = [r.name for r in results if not r.passed]
        if failed:
            logger.error(f"Validation failed: {', '.join(failed)}")
            return EXIT_NUMERICAL_FAILURE
        return EXIT_OK

    service = container.resolve(ExperimentService)
    table = await service.sweep(config)
    # the nominal table is on disk before any fit can fail
    if config.out:
        await container.resolve(CsvTableStorage).save(table, config.out)
    else:
        logger.info("No --out given, CSV not written")
    result = service.summarize(config, table)
    result.fits.extend(await service.sensitivity_fits(config))
    print_summary(result, stdout)
    return EXIT_OK


def cli_main(argv: Optional[Sequence[str]] = None, stdout: TextIO = None, stderr: TextIO = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except UsageError as e:
        stderr.write(e.usage)
        stderr.write(f"qetchain: error: {e.message}\n")
        return EXIT_CONFIG_ERROR
    except SystemExit as e:  # --help
        return int(e.code or 0)

    try:
        return asyncio.run(_run(args, stdout))
    except ConfigurationException as e:
        logger.error(f"Configuration error: {e.message}")
        stderr.write(f"qetchain: configuration error: {e.message}\n")
        return EXIT_CONFIG_ERROR
    except NumericalFailureException as e:
        logger.error(f"Numerical failure in {e.operation}: {e.message}")
        stderr.write(f"qetchain: numerical failure: {e.message}\n")
        return EXIT_NUMERICAL_FAILURE
    except DomainException as e:
        logger.error(f"Invalid run: {e.message}")
        stderr.write(f"qetchain: error: {e.message}\n")
        return EXIT_CONFIG_ERROR


def main() -> None:
    sys.exit(cli_main())
