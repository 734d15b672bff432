"""Tests for the figure presets and the spectral features they reproduce."""
import numpy as np
import pytest

from src.errors import ParameterDomainError
from src.model import pole_conditions
from src.sweep import (
    enhancement_ratio,
    extremum_pair,
    figure_names,
    figure_preset,
    gain_absorption_balance,
    locate_dip,
    run_sweep,
    velocity_grid,
)


@pytest.fixture(scope="module")
def fig2_series():
    return run_sweep(figure_preset("fig2"))


def test_fig2_varies_damping_with_matched_rates():
    spec = figure_preset("fig2")
    assert spec.varied == "gamma_m"
    assert 0.5 in spec.values and 2.0 in spec.values
    assert spec.base.kappa == spec.base.omega_m
    assert spec.beta_mode == "ideal"
    assert (spec.x_min, spec.x_max, spec.points) == (-6.0, 6.0, 2001)


def test_fig4_damping_is_fixed_fraction_of_mechanical_frequency():
    spec = figure_preset("fig4")
    assert spec.varied == "kappa"
    assert spec.base.gamma_m == pytest.approx(1e-4 * spec.base.omega_m, rel=1e-15)


def test_fig6_runs_in_absolute_units():
    spec = figure_preset("fig6")
    assert spec.values == (5000.0, 7000.0, 11000.0)
    assert spec.base.unit_scale == "rad/s"


def test_fig8_varies_velocity():
    spec = figure_preset("fig8")
    assert spec.varied == "v"
    assert spec.values == (-4.0, -2.0, 2.0, 4.0)
    assert spec.drag is not None
    assert spec.drag_x_points == (0.3, -1.0)


def test_unknown_preset_lists_valid_names():
    with pytest.raises(ParameterDomainError) as excinfo:
        figure_preset("fig9")
    for name in figure_names():
        assert name in excinfo.value.message


def test_drag_presets_override_length():
    assert figure_preset("fig3", length=0.25).drag.length == 0.25
    assert figure_preset("fig2").drag is None


@pytest.mark.parametrize("name", ["fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8"])
def test_every_preset_runs(name):
    spec = figure_preset(name, points=201)
    results = run_sweep(spec)
    assert len(results) == len(spec.values)
    for series in results:
        assert len(series.spectrum) == 201
        if spec.drag is not None:
            assert series.drag_x.shape == (201,)
            assert not series.drag_singular.any()


def test_velocity_grid_is_antisymmetric():
    grid = velocity_grid(-4.0, 4.0, 81)
    assert len(grid) == 81
    assert grid[40] == 0.0
    assert all(grid[i] == -grid[-1 - i] for i in range(81))


def test_group_index_takes_both_signs(fig2_series):
    for series in fig2_series:
        im_n_g = series.spectrum.column("Im n_g")
        assert im_n_g.min() < 0 < im_n_g.max()


def test_damping_enhancement_ratio(fig2_series):
    by_gamma = {series.value: series for series in fig2_series}
    ratio = enhancement_ratio(by_gamma[0.5], by_gamma[2.0])
    assert 3.0 <= ratio <= 5.0


def test_gain_mirrors_absorption(fig2_series):
    for series in fig2_series:
        assert gain_absorption_balance(series) < 0.05


def test_dip_sits_at_subfraction_root(fig2_series):
    for series in fig2_series:
        dip = locate_dip(series, "Re n_r")
        step = series.spectrum.x[1] - series.spectrum.x[0]
        x_pole = pole_conditions(series.params).x_pole
        assert not dip.boundary
        assert abs(dip.x - x_pole) <= max(step, 0.1 * series.params.gamma_m)
        assert dip.value == pytest.approx(1.0, abs=1e-3)


def test_fig8_families_are_sign_mirrored():
    results = {series.value: series for series in run_sweep(figure_preset("fig8", points=301))}
    for v in (2.0, 4.0):
        np.testing.assert_array_equal(results[-v].drag_x, -results[v].drag_x)
    low, high = extremum_pair(results[2.0], "Im n_g")
    assert low.value < 0 < high.value
