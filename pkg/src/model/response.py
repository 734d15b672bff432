"""
Closed-form probe response of a driven optomechanical cavity.

All functions are pure and vectorize over the detuning argument: pass a
float to get a complex scalar back, pass an array to get an array.
"""

from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import MODEL_CONFIG

from src.errors import ParameterDomainError
from src.model.params import MicroscopicParams, PoleConditions, SystemParams


def _finish(value: np.ndarray, like: ArrayLike):
    """Return a Python complex for scalar input, the array otherwise."""
    if np.ndim(like) == 0:
        return complex(value)
    return value


def _vanishes(denominator: np.ndarray, scale: np.ndarray) -> np.ndarray:
    """Mask of denominators that are zero up to floating-point cancellation."""
    threshold = np.maximum(MODEL_CONFIG["pole_atol"], MODEL_CONFIG["pole_rtol"] * scale)
    return np.abs(denominator) <= threshold


def compute_beta(micro: MicroscopicParams, kappa: float, omega_m: float) -> float:
    """Effective drive strength beta = g_m^2 eps^2 / (Lambda (kappa^2 + omega_m^2))."""
    if kappa <= 0 or omega_m <= 0:
        bad = [name for name, value in (("kappa", kappa), ("omega_m", omega_m)) if value <= 0]
        raise ParameterDomainError(f"non-positive input: {', '.join(bad)}", fields=bad)
    lam = micro.lambda_factor(omega_m)
    return micro.g_m**2 * micro.pump_amplitude**2 / (lam * (kappa**2 + omega_m**2))


def compute_N(params: SystemParams) -> complex:
    """Nonlinear correction N = -beta / (kappa - 2 i omega_m)."""
    return -params.beta / complex(params.kappa, -2 * params.omega_m)


def subfraction_denominator(params: SystemParams, x: ArrayLike, N: complex | None = None):
    """gamma_m/2 - i x + N, the denominator whose root is the transparency pole."""
    if N is None:
        N = compute_N(params)
    x_arr = np.asarray(x, dtype=float)
    return _finish(params.gamma_m / 2 - 1j * x_arr + N, x)


def _response(params: SystemParams, x: ArrayLike, N: complex) -> tuple[np.ndarray, np.ndarray]:
    """2 kappa / (kappa - i x + beta / s) and the mask of points where s vanishes."""
    x_arr = np.asarray(x, dtype=float)
    kappa = params.kappa
    if params.beta == 0:
        return 2 * kappa / (kappa - 1j * x_arr), np.zeros(x_arr.shape, dtype=bool)

    s = params.gamma_m / 2 - 1j * x_arr + N
    pole = _vanishes(s, params.gamma_m / 2 + np.abs(x_arr) + abs(N))
    with np.errstate(divide="ignore", invalid="ignore"):
        eps = 2 * kappa / (kappa - 1j * x_arr + params.beta / s)
    # Diverging subfraction drives the response to zero
    eps = np.where(pole, 0j, eps)
    return eps, pole


def eps_T_resonant(params: SystemParams, x: ArrayLike):
    """Resonant response eps_T = 2 kappa / (kappa - i x + beta / (gamma_m/2 - i x + N)).

    At the pole of the subfraction the analytic limit 0 is returned.
    """
    eps, _ = _response(params, x, compute_N(params))
    return _finish(eps, x)


def eps_T_linearized(params: SystemParams, x: ArrayLike):
    """Response of the standard linearized treatment: N dropped from the subfraction."""
    eps, _ = _response(params, x, 0j)
    return _finish(eps, x)


def pole_mask(params: SystemParams, x: ArrayLike) -> np.ndarray:
    """True where eps_T_resonant took the pole limit."""
    _, pole = _response(params, x, compute_N(params))
    return pole


def pole_conditions(params: SystemParams) -> PoleConditions:
    kappa, omega_m, gamma_m = params.kappa, params.omega_m, params.gamma_m
    return PoleConditions(
        x0=-omega_m * gamma_m / (2 * kappa),
        beta0=gamma_m * (4 * omega_m**2 + kappa**2) / (2 * kappa),
        x_pole=-omega_m * gamma_m / kappa,
    )


def c_plus_full(params: SystemParams, Delta: ArrayLike, delta: ArrayLike):
    """First-order sideband amplitude c_+ without the resonance approximation.

    c_+ = 1 / (kappa + i(Delta - delta)
               + beta / ((delta^2 - omega_m^2 + i delta gamma_m) / (2 i omega_m)
                         - beta / (kappa - i(Delta + delta))))

    Multiplied by 2 kappa this is the un-approximated response; with
    Delta = omega_m and delta = omega_m + x it reduces to eps_T_resonant.
    """
    Delta_arr = np.asarray(Delta, dtype=float)
    delta_arr = np.asarray(delta, dtype=float)
    kappa, omega_m, gamma_m, beta = params.kappa, params.omega_m, params.gamma_m, params.beta

    outer = kappa + 1j * (Delta_arr - delta_arr)
    if beta == 0:
        result = 1 / outer
    else:
        mechanical = (delta_arr**2 - omega_m**2 + 1j * delta_arr * gamma_m) / (2j * omega_m)
        backaction = beta / (kappa - 1j * (Delta_arr + delta_arr))
        inner = mechanical - backaction
        pole = _vanishes(inner, np.abs(mechanical) + np.abs(backaction))
        with np.errstate(divide="ignore", invalid="ignore"):
            result = 1 / (outer + beta / inner)
        result = np.where(pole, 0j, result)

    if np.ndim(Delta) == 0 and np.ndim(delta) == 0:
        return complex(result)
    return result


def eps_T_full(params: SystemParams, x: ArrayLike, Delta: float | None = None):
    """2 kappa c_+ at delta = omega_m + x, Delta defaulting to omega_m."""
    if Delta is None:
        Delta = params.omega_m
    x_arr = np.asarray(x, dtype=float)
    eps = 2 * params.kappa * np.asarray(c_plus_full(params, Delta, params.omega_m + x_arr))
    return _finish(eps, x)
