import io

import pytest

from application.services import ExperimentService
from domain.shared import FitException
from presentation import cli_main
from presentation.cli import build_run_config, effective_settings
from domain.experiments import RunMode
from infrastructure.config import Settings


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_setting1_writes_one_row_per_separation(tmp_path):
    path = tmp_path / "s1.csv"
    code, out, _ = _run(["setting1", "--n", "100", "--alpha", "a4", "--d-max", "40", "--out", str(path)])

    lines = path.read_text(encoding="utf-8").splitlines()
    assert code == 0
    assert lines[0] == "d,E_B_opt,E_N_before,E_N_after,delta_E_N,S_M_before,S_M_after,delta_S_M"
    assert len(lines) == 42
    assert out.splitlines()[0] == "quantity amplitude exponent offset r2 window"
    assert out.splitlines()[1].startswith("E_B_abs ")
    assert out.splitlines()[1].split()[3] == "-"
    assert "[10,40]" in out.splitlines()[1]


def test_repeated_runs_are_byte_identical(tmp_path):
    argv = ["setting2", "--n", "30", "--alpha", "0.95", "--ell-max", "6"]
    assert _run(argv + ["--out", str(tmp_path / "a.csv")])[0] == 0
    assert _run(argv + ["--out", str(tmp_path / "b.csv"), "--threads", "1"])[0] == 0

    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_setting2_prints_checks():
    code, out, _ = _run(["setting2", "--n", "40", "--alpha", "a2"])
    checks = [line.split() for line in out.splitlines() if line.startswith("check ")]

    assert code == 0
    assert [c[1] for c in checks] == ["ratio_monotone", "ratio_max_at_largest_ell", "ratio_below_one"]


def test_size_sweep_reports_fits_and_plateaus(tmp_path):
    path = tmp_path / "size.csv"
    code, out, _ = _run(
        ["size-sweep", "--alpha", "a4", "--n-list", "20,30,40,50", "--fit-min", "20", "--fit-max", "50", "--out", str(path)]
    )
    lines = out.splitlines()

    assert code == 0
    assert len(path.read_text(encoding="utf-8").splitlines()) == 5
    assert [line.split()[0] for line in lines[1:4]] == ["delta_E_N", "E_B_abs", "beta"]
    assert lines[1].split()[3] == "-"
    assert lines[2].split()[3] != "-"
    assert [line.split()[1] for line in lines if line.startswith("plateau ")] == ["delta_E_N", "E_B_abs"]


def test_config_file_with_flag_override(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("n = 20\nalpha = a1\nd_max = 4\n", encoding="utf-8")
    path = tmp_path / "s1.csv"

    code, _, _ = _run(["setting1", "--config", str(config), "--d-max", "6", "--out", str(path)])
    assert code == 0
    assert len(path.read_text(encoding="utf-8").splitlines()) == 8


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["setting3"],
        ["setting1", "--bogus"],
        ["setting1", "--n", "ten"],
        ["setting1", "--alpha", "a9"],
    ],
)
def test_usage_errors_exit_with_one(argv):
    code, out, err = _run(argv)

    assert code == 1
    assert out == ""
    assert err.startswith("usage:")


@pytest.mark.parametrize(
    "argv",
    [
        ["setting1", "--n", "7"],
        ["setting1", "--n", "20", "--d-max", "19"],
        ["size-sweep", "--n-list", "20,21"],
        ["setting2", "--n", "20", "--ell-max", "12"],
    ],
)
def test_invalid_runs_exit_with_one(argv):
    code, _, err = _run(argv)
    assert code == 1
    assert "error" in err


def test_bad_config_file_exits_with_one(tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("colour = red\n", encoding="utf-8")

    code, _, err = _run(["setting1", "--config", str(config)])
    assert code == 1
    assert "configuration error" in err

    code, _, _ = _run(["setting1", "--config", str(tmp_path / "missing.cfg")])
    assert code == 1


def test_numerical_failure_exits_with_two_and_keeps_the_table(monkeypatch, tmp_path):
    def fail(self, config, table):
        raise FitException("E_B_abs", "no positive residuals")

    monkeypatch.setattr(ExperimentService, "summarize", fail)
    path = tmp_path / "s1.csv"
    code, out, err = _run(["setting1", "--n", "20", "--d-max", "5", "--out", str(path)])

    assert code == 2
    assert out == ""
    assert "numerical failure" in err
    assert len(path.read_text(encoding="utf-8").splitlines()) == 7


def test_failed_sensitivity_refit_keeps_the_nominal_run(tmp_path):
    path = tmp_path / "size.csv"
    code, out, _ = _run(["size-sweep", "--alpha", "a4", "--omega-sensitivity", "4", "--out", str(path)])

    quantities = [line.split()[0] for line in out.splitlines()[1:] if not line.startswith("plateau")]
    assert code == 0
    assert len(path.read_text(encoding="utf-8").splitlines()) == 6
    assert quantities[:3] == ["delta_E_N", "E_B_abs", "beta"]
    assert "delta_E_N@omega=4" in quantities
    assert "E_B_abs@omega=4" not in quantities


def test_help_exits_cleanly():
    assert _run(["--help"])[0] == 0


def test_fit_window_defaults_per_mode():
    settings = Settings()
    assert build_run_config(RunMode.SETTING1, {}, settings).fit_window == (10.0, 40.0)
    assert build_run_config(RunMode.SIZE_SWEEP, {}, settings).fit_window == (40.0, 100.0)
    assert build_run_config(RunMode.SETTING2, {}, settings).fit_window is None
    assert build_run_config(RunMode.SETTING1, {"fit_max": 30.0}, settings).fit_window == (10.0, 30.0)


def test_runtime_settings_follow_flags():
    settings = effective_settings(Settings(), {"threads": 2, "cutoff": 30, "log_level": "DEBUG", "n": 40})
    assert (settings.threads, settings.fock_cutoff, settings.log_level) == (2, 30, "DEBUG")
    assert settings.n_sites == Settings().n_sites


@pytest.mark.slow
def test_validate_prints_one_line_per_check():
    code, out, _ = _run(["validate", "--samples", "50000", "--threads", "4"])
    lines = out.splitlines()

    assert code == 0
    assert len(lines) == 9
    assert all(line.split()[1] == "PASS" for line in lines)
