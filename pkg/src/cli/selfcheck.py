"""
Embedded invariant suite run by the ``selfcheck`` command.

The response function under test is injectable so a deliberately broken
variant can be shown to fail.
"""

from __future__ import annotations

import logging
import sys
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import OPTICS_CONFIG, SELFCHECK_CONFIG

from src.errors import NumericalDomainError
from src.model import MicroscopicParams, SystemParams, eps_T_resonant, pole_conditions, steady_state
from src.model.response import eps_T_full
from src.optics.drag import DragConfig, light_drag
from src.optics.indices import dchi_dx_analytic, default_fd_step

logger = logging.getLogger(__name__)

ResponseFn = Callable[[SystemParams, np.ndarray], np.ndarray]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def _fig2_params() -> SystemParams:
    return SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0).ideal()


def _central_difference(response: ResponseFn, params: SystemParams, x: float, h: float) -> complex:
    values = np.asarray(response(params, np.array([x - h, x + h])))
    return complex((values[1] - values[0]) / (2 * h))


def check_derivative(response: ResponseFn, rng: np.random.Generator, draws: int) -> CheckResult:
    """Analytic dchi/dx against a central difference on randomized parameter draws."""
    tolerance = SELFCHECK_CONFIG["derivative_rtol"]
    worst = 0.0
    for _ in range(draws):
        kappa = 10 ** rng.uniform(3, 5)
        gamma_m = rng.uniform(0.5, 2.0)
        base = SystemParams(kappa=kappa, omega_m=kappa * rng.uniform(0.5, 2.0), gamma_m=gamma_m).ideal()
        params = base.with_beta(base.beta * rng.uniform(0.5, 2.0))
        x = pole_conditions(base).x_pole + rng.uniform(-3, 3) * base.beta / base.kappa
        h = float(default_fd_step(params, x))
        analytic = dchi_dx_analytic(params, x)
        numeric = _central_difference(response, params, x, h)
        worst = max(worst, abs(numeric - analytic) / max(abs(analytic), 1.0 / gamma_m))
    return CheckResult("derivative cross-check", worst < tolerance, worst, tolerance, f"{draws} draws")


def check_richardson(response: ResponseFn) -> CheckResult:
    """Halving h shrinks the finite-difference gap about four times."""
    params = _fig2_params()
    x, h = 0.8, 0.02
    exact = dchi_dx_analytic(params, x)
    coarse = abs(_central_difference(response, params, x, h) - exact)
    fine = abs(_central_difference(response, params, x, h / 2) - exact)
    ratio = coarse / fine if fine > 0 else float("inf")
    return CheckResult("richardson ratio", 3.0 < ratio < 5.0, ratio, 4.0, "expected within (3, 5)")


def check_full_response(response: ResponseFn) -> CheckResult:
    """Resonant response against the full sideband solution over |x| <= 5 gamma_m."""
    params = _fig2_params()
    x = np.linspace(-5.0, 5.0, 2001) * params.gamma_m
    resonant = np.asarray(response(params, x))
    full = np.asarray(eps_T_full(params, x))
    measured = float(np.max(np.abs(full - resonant)) / np.max(np.abs(resonant)))
    tolerance = SELFCHECK_CONFIG["full_response_rtol"]
    return CheckResult("full-response equivalence", measured < tolerance, measured, tolerance, "max|diff| / max|eps_T|")


def check_transparency(response: ResponseFn) -> CheckResult:
    """The response vanishes at the subfraction root and stays small beside it."""
    params = _fig2_params()
    x_pole = pole_conditions(params).x_pole
    offset = 1e-6 * params.gamma_m
    values = np.abs(np.asarray(response(params, np.array([x_pole, x_pole - offset, x_pole + offset]))))
    reference = abs(complex(np.asarray(response(params, np.array([3 * params.gamma_m])))[0]))
    measured = float(max(values[1:]) / reference)
    passed = values[0] == 0 and measured < 1e-4
    return CheckResult("pole transparency", bool(passed), measured, 1e-4, f"|eps_T(x_pole)| = {values[0]:.3e}")


def check_empty_cavity(response: ResponseFn) -> CheckResult:
    """beta = 0 reproduces 2 kappa / (kappa - i x) to a few ulp."""
    params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0)
    x = np.linspace(-3.0, 3.0, 2001)
    values = np.asarray(response(params, x))
    expected = 2 * params.kappa / (params.kappa - 1j * x)
    ulps = max(
        float(np.max(np.abs(values.real - expected.real) / np.spacing(np.abs(expected.real)))),
        float(np.max(np.abs(values.imag - expected.imag) / np.maximum(np.spacing(np.abs(expected.imag)), np.spacing(1e-300)))),
    )
    return CheckResult("empty-cavity limit", ulps <= 4, ulps, 4.0, "componentwise ulp")


def check_conjugate_pairing(rng: np.random.Generator, draws: int) -> CheckResult:
    """q_+ equals conj(q_-) across randomized drives and detunings."""
    tolerance = SELFCHECK_CONFIG["conjugate_rtol"]
    worst = 0.0
    for _ in range(draws):
        params = SystemParams(kappa=1e4, omega_m=1e4, gamma_m=rng.uniform(0.01, 10.0))
        micro = MicroscopicParams(g_m=10.0, pump_amplitude=10 ** rng.uniform(0, 6), mass=1e-12)
        x = rng.uniform(-2.0, 2.0)
        try:
            state = steady_state(params, micro, Delta=params.omega_m, delta=params.omega_m + x)
        except NumericalDomainError as e:
            return CheckResult("conjugate pairing", False, float("inf"), tolerance, str(e))
        gap = abs(state.q_plus - np.conj(state.q_minus)) / max(abs(state.q_plus), np.finfo(float).tiny)
        worst = max(worst, gap)
    return CheckResult("conjugate pairing", worst <= tolerance, worst, tolerance, f"{draws} draws")


def check_drag_parity() -> CheckResult:
    """Drag is odd in v and doubles exactly with v."""
    params = _fig2_params()
    x = 0.3 * params.gamma_m
    n_r = 1 + 2 * np.pi * eps_T_resonant(params, x)
    n_g = n_r + 2 * np.pi * OPTICS_CONFIG["omega_probe_factor"] * params.omega_m * dchi_dx_analytic(params, x)
    forward = light_drag(n_g, n_r, DragConfig(v=2.0))
    backward = light_drag(n_g, n_r, DragConfig(v=-2.0))
    doubled = light_drag(n_g, n_r, DragConfig(v=4.0))
    still = light_drag(n_g, n_r, DragConfig(v=0.0))
    passed = backward == -forward and doubled == 2 * forward and still == 0
    return CheckResult("drag parity", passed, abs(backward + forward), 0.0, "exact")


def run_selfcheck(
    response: ResponseFn | None = None, draws: int | None = None, seed: int | None = None
) -> list[CheckResult]:
    response = response or eps_T_resonant
    draws = draws or SELFCHECK_CONFIG["draws"]
    rng = np.random.default_rng(SELFCHECK_CONFIG["seed"] if seed is None else seed)
    start = time.perf_counter()
    results = [
        check_derivative(response, rng, draws),
        check_richardson(response),
        check_full_response(response),
        check_transparency(response),
        check_empty_cavity(response),
        check_conjugate_pairing(rng, max(draws // 5, 1)),
        check_drag_parity(),
    ]
    logger.info(f"Selfcheck finished in {time.perf_counter() - start:.2f}s")
    return results
