"""Tests for the closed-form response formulas."""
import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from src.errors import ParameterDomainError
from src.model import (
    MicroscopicParams,
    SystemParams,
    c_plus_full,
    compute_beta,
    compute_N,
    eps_T_linearized,
    eps_T_resonant,
    pole_conditions,
)
from src.model.response import eps_T_full, pole_mask

mpmath.mp.dps = 50


@pytest.fixture
def fig2_params():
    base = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0)
    return base.ideal()


def oracle_eps_T(kappa, omega_m, gamma_m, beta, x):
    kappa, omega_m, gamma_m, beta, x = (mpmath.mpf(v) for v in (kappa, omega_m, gamma_m, beta, x))
    N = -beta / (kappa - 2j * omega_m)
    return 2 * kappa / (kappa - 1j * x + beta / (gamma_m / 2 - 1j * x + N))


def assert_close(value, reference, rtol):
    assert abs(mpmath.mpc(value) - reference) <= rtol * abs(reference)


def test_system_params_rejects_non_positive_kappa():
    with pytest.raises(ValidationError) as info:
        SystemParams(kappa=0.0, omega_m=1.0, gamma_m=1.0)
    assert "kappa" in str(info.value)


def test_system_params_rejects_unknown_unit_scale():
    with pytest.raises(ValidationError):
        SystemParams(kappa=1.0, omega_m=1.0, gamma_m=1.0, unit_scale="hz")


def test_compute_beta_zero_pump():
    micro = MicroscopicParams(g_m=1.0, pump_amplitude=0.0, mass=1e-12)
    assert compute_beta(micro, kappa=1e4, omega_m=1e4) == 0.0


def test_compute_beta_quadratic_in_pump():
    micro = MicroscopicParams(g_m=10.0, pump_amplitude=1e3, mass=1e-12)
    doubled = micro.model_copy(update={"pump_amplitude": 2e3})
    assert compute_beta(doubled, 1e4, 1e4) == 4 * compute_beta(micro, 1e4, 1e4)


@given(st.floats(min_value=0.1, max_value=10.0))
def test_compute_beta_scaling(scale):
    micro = MicroscopicParams(g_m=10.0, pump_amplitude=1e3, mass=1e-12)
    scaled = micro.model_copy(update={"pump_amplitude": scale * 1e3})
    expected = scale**2 * compute_beta(micro, 1e4, 1e4)
    assert compute_beta(scaled, 1e4, 1e4) == pytest.approx(expected, rel=1e-14)


def test_compute_beta_matches_oracle():
    micro = MicroscopicParams(g_m=10.0, pump_amplitude=1e3, mass=1e-12, hbar=1.0546e-34)
    g, eps, m, w, k, hbar = (mpmath.mpf(v) for v in ("10", "1e3", "1e-12", "1e4", "1e4", "1.0546e-34"))
    expected = g**2 * eps**2 / ((2 * m * w / hbar) * (k**2 + w**2))
    assert_close(compute_beta(micro, 1e4, 1e4), expected, 1e-14)


@pytest.mark.parametrize("kappa, omega_m", [(0.0, 1.0), (1.0, -1.0)])
def test_compute_beta_rejects_non_positive_rates(kappa, omega_m):
    micro = MicroscopicParams(g_m=1.0, pump_amplitude=1.0, mass=1.0)
    with pytest.raises(ParameterDomainError):
        compute_beta(micro, kappa, omega_m)


def test_microscopic_params_from_cavity():
    micro = MicroscopicParams.from_cavity(omega_c=2e15, length=1e-2, pump_amplitude=1e3, mass=1e-12)
    assert micro.g_m == pytest.approx(2e17)
    assert micro.lambda_factor(1e4) == pytest.approx(2 * 1e-12 * 1e4 / micro.hbar)


def test_compute_N_zero_beta():
    assert compute_N(SystemParams(kappa=1.0, omega_m=0.5, gamma_m=1.0)) == 0


def test_compute_N_hand_value():
    params = SystemParams(kappa=1.0, omega_m=0.5, gamma_m=1.0, beta=2.0)
    assert compute_N(params) == complex(-1.0, -1.0)


def test_compute_N_matches_oracle(fig2_params):
    k, w, b = (mpmath.mpf(v) for v in (fig2_params.kappa, fig2_params.omega_m, fig2_params.beta))
    assert_close(compute_N(fig2_params), -b / (k - 2j * w), 1e-14)
    assert abs(compute_N(fig2_params)) == pytest.approx(float(b / mpmath.sqrt(k**2 + 4 * w**2)), rel=1e-14)


def test_compute_N_linear_in_beta(fig2_params):
    doubled = fig2_params.with_beta(2 * fig2_params.beta)
    assert compute_N(doubled) == 2 * compute_N(fig2_params)


def test_empty_cavity_response_is_exact():
    params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0, beta=0.0)
    x = np.linspace(-5.0, 5.0, 2001)
    np.testing.assert_array_equal(eps_T_resonant(params, x), 2 * params.kappa / (params.kappa - 1j * x))
    assert eps_T_resonant(params, 0.0) == 2.0


def test_response_vanishes_at_pole(fig2_params):
    poles = pole_conditions(fig2_params)
    assert eps_T_resonant(fig2_params, poles.x_pole) == 0
    assert pole_mask(fig2_params, np.array([poles.x_pole, 3.0])).tolist() == [True, False]
    reference = abs(eps_T_resonant(fig2_params, 3.0))
    for offset in (-1e-6, 1e-6):
        assert abs(eps_T_resonant(fig2_params, poles.x_pole + offset)) < 1e-4 * reference


def test_response_continuous_in_beta_near_pole(fig2_params):
    x_pole = pole_conditions(fig2_params).x_pole
    magnitudes = [abs(eps_T_resonant(fig2_params.with_beta(fig2_params.beta * (1 + d)), x_pole)) for d in (1e-3, 1e-5, 1e-7)]
    assert magnitudes[0] > magnitudes[1] > magnitudes[2]
    assert magnitudes[2] < 1e-6


def test_response_matches_oracle(fig2_params):
    expected = oracle_eps_T(1e4, 1e4, 1.0, fig2_params.beta, 0.3)
    assert_close(eps_T_resonant(fig2_params, 0.3), expected, 1e-13)


def test_linearized_equals_resonant_without_drive():
    params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0)
    x = np.linspace(-3, 3, 61)
    np.testing.assert_array_equal(eps_T_linearized(params, x), eps_T_resonant(params, x))


def test_linearized_difference_shrinks_with_beta(fig2_params):
    gaps = [
        abs(eps_T_resonant(fig2_params.with_beta(b), 0.0) - eps_T_linearized(fig2_params.with_beta(b), 0.0))
        for b in (fig2_params.beta, fig2_params.beta / 10, fig2_params.beta / 100)
    ]
    assert gaps[0] > gaps[1] > gaps[2]


def test_linearized_misses_the_transparency_pole(fig2_params):
    x_pole = pole_conditions(fig2_params).x_pole
    assert eps_T_resonant(fig2_params, x_pole) == 0
    assert abs(eps_T_linearized(fig2_params, x_pole)) > 1e-3


def test_pole_conditions_equal_rates():
    poles = pole_conditions(SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0))
    assert poles.x0 == -0.5
    assert poles.x_pole == -1.0


def test_pole_conditions_undamped():
    poles = pole_conditions(SystemParams(kappa=3.0, omega_m=2.0, gamma_m=0.0))
    assert poles.x0 == 0 and poles.beta0 == 0 and poles.x_pole == 0


def test_pole_conditions_hand_values():
    poles = pole_conditions(SystemParams(kappa=2.0, omega_m=3.0, gamma_m=0.1))
    assert poles.x0 == pytest.approx(-0.075, rel=1e-15)
    assert poles.beta0 == pytest.approx(1.0, rel=1e-15)
    assert poles.x_pole == pytest.approx(2 * poles.x0, rel=1e-15)


@settings(max_examples=50)
@given(
    st.floats(min_value=1e2, max_value=1e5),
    st.floats(min_value=0.5, max_value=2.0),
    st.floats(min_value=0.1, max_value=5.0),
)
def test_subfraction_vanishes_at_x_pole(kappa, ratio, gamma_m):
    params = SystemParams(kappa=kappa, omega_m=ratio * kappa, gamma_m=gamma_m).ideal()
    assert eps_T_resonant(params, pole_conditions(params).x_pole) == 0


def test_c_plus_full_without_drive():
    params = SystemParams(kappa=4.0, omega_m=1.0, gamma_m=0.1)
    assert c_plus_full(params, 1.5, 1.5) == pytest.approx(0.25)


def test_c_plus_full_reduces_to_resonant_response(fig2_params):
    x = np.linspace(-5.0, 5.0, 2001)
    full = eps_T_full(fig2_params, x)
    resonant = eps_T_resonant(fig2_params, x)
    assert np.max(np.abs(full - resonant)) / np.max(np.abs(resonant)) < 1e-3
    away = np.abs(x - pole_conditions(fig2_params).x_pole) > 0.5
    assert np.all(np.abs(full - resonant)[away] < 1e-3 * np.abs(resonant)[away])


def test_c_plus_full_far_detuned_differs(fig2_params):
    far = 2 * fig2_params.kappa * c_plus_full(fig2_params, 0.5 * fig2_params.omega_m, fig2_params.omega_m + 0.3)
    assert abs(far - eps_T_resonant(fig2_params, 0.3)) > 0.1 * abs(eps_T_resonant(fig2_params, 0.3))
