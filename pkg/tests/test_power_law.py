import numpy as np
import pytest

from domain.experiments import PowerLawFit, fit_power_law
from domain.shared import FitException, InvalidArgumentException


def test_exact_power_law():
    x = np.arange(1.0, 21.0)
    fit = fit_power_law(np.column_stack((x, 2 * x**3)))

    assert fit.amplitude == pytest.approx(2.0, abs=1e-10)
    assert fit.exponent == pytest.approx(3.0, abs=1e-10)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-10)
    assert not fit.has_offset
    assert fit.window == (1.0, 20.0)


def test_exact_power_law_with_offset():
    x = np.arange(10.0, 110.0, 2.0)
    fit = fit_power_law(np.column_stack((x, 5 * x**-2 + 7)), with_offset=True)

    assert fit.offset == pytest.approx(7.0, rel=1e-6)
    assert fit.exponent == pytest.approx(-2.0, rel=1e-4)
    assert fit.amplitude == pytest.approx(5.0, rel=1e-3)
    assert fit.r_squared > 1 - 1e-9


def test_window_restricts_points():
    x = np.arange(1.0, 51.0)
    y = np.where(x < 10, 1.0, 3 * x**-1.5)
    fit = fit_power_law(np.column_stack((x, y)), window=(10, 40), quantity="E_B_abs")

    assert fit.n_points == 31
    assert fit.window == (10.0, 40.0)
    assert fit.quantity == "E_B_abs"
    assert fit.exponent == pytest.approx(-1.5, abs=1e-10)


def test_points_are_sorted_before_fitting():
    x = np.array([4.0, 1.0, 3.0, 2.0])
    fit = fit_power_law(np.column_stack((x, 0.5 * x**2)))
    assert fit.exponent == pytest.approx(2.0, abs=1e-12)
    assert fit.evaluate([3.0])[0] == pytest.approx(4.5, rel=1e-12)


def test_too_few_points():
    with pytest.raises(FitException):
        fit_power_law([(1.0, 1.0), (2.0, 4.0)])


def test_non_positive_values_abort_the_fit():
    with pytest.raises(FitException):
        fit_power_law([(1.0, 1.0), (2.0, -4.0), (3.0, 9.0)])
    with pytest.raises(FitException):
        fit_power_law([(0.0, 1.0), (2.0, 4.0), (3.0, 9.0)])


def test_flat_tail_leaves_no_residual():
    with pytest.raises(FitException):
        fit_power_law([(1.0, 2.0), (2.0, 2.0), (3.0, 2.0), (4.0, 2.0)], with_offset=True)


def test_malformed_points():
    with pytest.raises(InvalidArgumentException):
        fit_power_law([1.0, 2.0, 3.0])


def test_renamed_keeps_parameters():
    fit = PowerLawFit("E_B_abs", 2.0, -3.0, 0.99, (10.0, 40.0), 31)
    renamed = fit.renamed("E_B_abs@omega=2")

    assert renamed.quantity == "E_B_abs@omega=2"
    assert (renamed.amplitude, renamed.exponent, renamed.window) == (2.0, -3.0, (10.0, 40.0))
