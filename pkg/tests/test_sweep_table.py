import numpy as np
import pytest

from domain.experiments import (
    SETTING2_COLUMNS,
    RunConfig,
    RunMode,
    SweepCompletedEvent,
    SweepRowRecordedEvent,
    SweepTable,
)
from domain.shared import BusinessRuleViolationException, InvalidArgumentException


def _row(ell, ratio=0.1):
    return {"ell": ell, "delta_E_N": 1.0, "E_B_abs": ratio, "ratio": ratio}


def test_rows_keep_recording_order():
    table = SweepTable("setting2", SETTING2_COLUMNS)
    for ell in (3, 1, 2):
        table.record(_row(ell))

    assert len(table) == 3
    assert np.array_equal(table.column("ell"), [3, 1, 2])
    assert table.as_dicts()[0] == _row(3)


def test_record_rejects_mismatched_rows():
    table = SweepTable("setting2", SETTING2_COLUMNS)
    with pytest.raises(InvalidArgumentException):
        table.record({"ell": 1})
    with pytest.raises(InvalidArgumentException):
        table.record({**_row(1), "beta": 2.0})


def test_completed_table_is_closed():
    table = SweepTable("setting2", SETTING2_COLUMNS)
    table.record(_row(1))
    table.complete()
    table.complete()

    with pytest.raises(BusinessRuleViolationException):
        table.record(_row(2))

    events = table.pull_domain_events()
    assert [type(e) for e in events] == [SweepRowRecordedEvent, SweepCompletedEvent]
    assert events[-1].n_rows == 1
    assert not table.has_domain_events


def test_unknown_column():
    with pytest.raises(InvalidArgumentException):
        SweepTable("t", ("a", "b")).column("c")
    with pytest.raises(InvalidArgumentException):
        SweepTable("t", ("a", "a"))


def test_run_config_ranges():
    config = RunConfig(RunMode.SETTING1, n_sites=20, d_min=2, d_max=5)
    assert list(config.d_range) == [2, 3, 4, 5]

    config = RunConfig(RunMode.SETTING2, n_sites=20)
    assert list(config.ell_range) == list(range(1, 9))


@pytest.mark.parametrize(
    "kwargs, error",
    [
        ({"mode": RunMode.SETTING1, "n_sites": 20, "d_max": 19}, BusinessRuleViolationException),
        ({"mode": RunMode.SETTING1, "d_min": 5, "d_max": 4}, InvalidArgumentException),
        ({"mode": RunMode.SETTING2, "n_sites": 20, "ell_max": 9}, InvalidArgumentException),
        ({"mode": RunMode.SIZE_SWEEP, "n_list": (20, 21)}, BusinessRuleViolationException),
        ({"mode": RunMode.SIZE_SWEEP, "n_list": (4, 20)}, BusinessRuleViolationException),
        ({"mode": RunMode.SETTING1, "fit_window": (40, 10)}, InvalidArgumentException),
        ({"mode": RunMode.VALIDATE, "samples": 10}, InvalidArgumentException),
    ],
)
def test_run_config_validation(kwargs, error):
    with pytest.raises(error):
        RunConfig(**kwargs)


def test_run_mode_from_string():
    assert RunMode.from_string("size-sweep") is RunMode.SIZE_SWEEP
    with pytest.raises(InvalidArgumentException):
        RunMode.from_string("setting3")
