"""Tests for susceptibility, refractive index and group index."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.errors import ParameterDomainError
from src.model import SystemParams, eps_T_resonant, pole_conditions
from src.optics import (
    COLUMNS,
    compute_spectrum,
    dchi_dx_analytic,
    dchi_dx_fd,
    default_omega_probe,
    group_index,
    refractive_index,
)


@pytest.fixture
def fig2_params():
    return SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0).ideal()


def test_empty_cavity_derivative_at_resonance():
    params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0)
    assert dchi_dx_analytic(params, 0.0) == pytest.approx(2j / 1e4, rel=1e-14)


def test_refractive_index_of_empty_cavity_at_resonance():
    params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0)
    assert refractive_index(eps_T_resonant(params, 0.0)) == pytest.approx(1 + 4 * np.pi)


def test_derivative_matches_finite_difference(fig2_params):
    x = np.array([-3.0, -1.5, -0.4, 0.0, 0.3, 1.0, 2.7])
    analytic = dchi_dx_analytic(fig2_params, x)
    numeric = dchi_dx_fd(fig2_params, x)
    np.testing.assert_allclose(numeric, analytic, rtol=1e-6)


def test_derivative_at_pole_is_limit_value(fig2_params):
    x_pole = pole_conditions(fig2_params).x_pole
    expected = -2j * fig2_params.kappa / fig2_params.beta
    assert dchi_dx_analytic(fig2_params, x_pole) == pytest.approx(expected, rel=1e-9)
    assert dchi_dx_fd(fig2_params, x_pole, h=1e-4) == pytest.approx(expected, rel=1e-6)


@settings(max_examples=200, deadline=None)
@given(
    ratio=st.floats(0.5, 2.0),
    gamma_m=st.floats(0.5, 2.0),
    beta_scale=st.floats(0.5, 2.0),
    offset=st.floats(-3.0, 3.0),
)
def test_derivative_matches_finite_difference_near_transparency(ratio, gamma_m, beta_scale, offset):
    base = SystemParams(kappa=1e4, omega_m=1e4 * ratio, gamma_m=gamma_m).ideal()
    params = base.with_beta(beta_scale * base.beta)
    width = base.beta / base.kappa
    x = pole_conditions(base).x_pole + offset * width
    analytic = dchi_dx_analytic(params, x)
    numeric = dchi_dx_fd(params, x)
    assert abs(numeric - analytic) <= 1e-6 * max(abs(analytic), 1.0 / gamma_m)


def test_finite_difference_rejects_non_positive_step(fig2_params):
    with pytest.raises(ParameterDomainError):
        dchi_dx_fd(fig2_params, 0.0, h=0.0)


def test_finite_difference_converges_quadratically(fig2_params):
    x = 0.8
    exact = dchi_dx_analytic(fig2_params, x)
    coarse = abs(dchi_dx_fd(fig2_params, x, h=0.02) - exact)
    fine = abs(dchi_dx_fd(fig2_params, x, h=0.01) - exact)
    assert 3.0 < coarse / fine < 5.0


def test_group_index_reduces_to_refractive_index_without_probe_dispersion():
    params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0)
    x = 0.0
    n_g = group_index(params, x, omega_probe=1e5)
    assert n_g == pytest.approx(1 + 4 * np.pi + 2 * np.pi * 1e5 * 2j / 1e4)


def test_group_index_rejects_non_positive_probe(fig2_params):
    with pytest.raises(ParameterDomainError):
        group_index(fig2_params, 0.0, omega_probe=0.0)


def test_default_probe_frequency():
    params = SystemParams(kappa=1.0, omega_m=3.0, gamma_m=1.0)
    assert default_omega_probe(params) == pytest.approx(3e4)


def test_spectrum_columns_and_points(fig2_params):
    x = np.linspace(-3, 3, 61)
    spectrum = compute_spectrum(fig2_params, x)
    assert len(spectrum) == 61
    assert set(spectrum.columns()) == set(COLUMNS)
    np.testing.assert_array_equal(spectrum.column("Re n_r"), spectrum.n_r.real)
    np.testing.assert_array_equal(spectrum.column("Im(n_g)"), spectrum.n_g.imag)
    points = spectrum.points()
    assert points[10].x == pytest.approx(x[10])
    assert points[10].n_g == spectrum.n_g[10]


def test_spectrum_rejects_unknown_column(fig2_params):
    spectrum = compute_spectrum(fig2_params, [0.0, 1.0])
    with pytest.raises(ParameterDomainError):
        spectrum.column("re_speed")


def test_spectrum_flags_pole(fig2_params):
    x_pole = pole_conditions(fig2_params).x_pole
    spectrum = compute_spectrum(fig2_params, [x_pole - 1.0, x_pole, x_pole + 1.0])
    assert spectrum.pole.tolist() == [False, True, False]
    assert spectrum.n_r[1] == 1


def test_group_index_changes_sign_across_damping_family():
    minima = {}
    x = np.linspace(-6, 6, 4001)
    for gamma_m in (0.5, 2.0):
        params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=gamma_m).ideal()
        im_n_g = compute_spectrum(params, x).n_g.imag
        assert im_n_g.min() < 0 < im_n_g.max()
        minima[gamma_m] = im_n_g.min()
    assert 2.0 < minima[0.5] / minima[2.0] < 8.0


def test_spectrum_is_empty_cavity_when_undriven():
    params = SystemParams(kappa=2.0, omega_m=1.0, gamma_m=1.0)
    x = np.array([-1.0, 0.0, 1.0])
    spectrum = compute_spectrum(params, x, omega_probe=1.0)
    np.testing.assert_allclose(spectrum.eps_T, 4 / (2 - 1j * x))
    assert not spectrum.pole.any()
