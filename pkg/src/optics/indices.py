"""
Susceptibility, complex refractive index and complex group index.

Naming follows the absorption/dispersion convention used for these spectra:
Re(n_r) is called absorption and Im(n_r) dispersion, the reverse of the
usual optics labelling.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numpy.typing import ArrayLike

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import OPTICS_CONFIG

from src.errors import ParameterDomainError
from src.model.params import SystemParams
from src.model.response import _finish, eps_T_resonant, pole_mask, subfraction_denominator

TWO_PI = 2 * np.pi

COLUMNS = (
    "x",
    "re_eps_T",
    "im_eps_T",
    "re_chi",
    "im_chi",
    "re_n_r",
    "im_n_r",
    "re_dchi_dx",
    "im_dchi_dx",
    "re_n_g",
    "im_n_g",
)


def susceptibility(eps_T):
    """chi is identified with the output-field response eps_T."""
    return eps_T


def refractive_index(chi):
    return 1 + TWO_PI * chi


def default_omega_probe(params: SystemParams) -> float:
    return OPTICS_CONFIG["omega_probe_factor"] * params.omega_m


def dchi_dx_analytic(params: SystemParams, x: ArrayLike):
    """Exact derivative of eps_T_resonant with respect to x.

    With D = kappa - i x + beta/s and s = gamma_m/2 - i x + N this is
    -2 kappa D' / D^2, D' = -i + i beta / s^2, evaluated in the pole-free
    form 2 i kappa (s^2 - beta) / ((kappa - i x) s + beta)^2. At s = 0 the
    form gives the limit -2 i kappa / beta of the dip bottom.
    """
    x_arr = np.asarray(x, dtype=float)
    kappa, beta = params.kappa, params.beta
    if beta == 0:
        derivative = 2j * kappa / (kappa - 1j * x_arr) ** 2
    else:
        s = np.asarray(subfraction_denominator(params, x_arr))
        derivative = 2j * kappa * (s**2 - beta) / ((kappa - 1j * x_arr) * s + beta) ** 2
    return _finish(derivative, x)


def default_fd_step(params: SystemParams, x: ArrayLike):
    step = np.maximum(OPTICS_CONFIG["fd_gamma_step"] * params.gamma_m, OPTICS_CONFIG["fd_x_step"] * np.abs(x))
    # Undamped resonator at x = 0 has no natural scale
    return np.where(step > 0, step, OPTICS_CONFIG["fd_gamma_step"])


def dchi_dx_fd(params: SystemParams, x: ArrayLike, h: ArrayLike | None = None):
    """Central difference (chi(x + h) - chi(x - h)) / (2 h)."""
    x_arr = np.asarray(x, dtype=float)
    if h is None:
        h = default_fd_step(params, x_arr)
    h_arr = np.asarray(h, dtype=float)
    if np.any(h_arr <= 0):
        raise ParameterDomainError("finite-difference step must be positive", fields=["h"])
    forward = np.asarray(eps_T_resonant(params, x_arr + h_arr))
    backward = np.asarray(eps_T_resonant(params, x_arr - h_arr))
    return _finish((forward - backward) / (2 * h_arr), x)


def group_index(params: SystemParams, x: ArrayLike, omega_probe: float):
    """n_g = n_r + 2 pi omega dchi/dx."""
    if not omega_probe > 0:
        raise ParameterDomainError(f"omega_probe must be positive, got {omega_probe}", fields=["omega_probe"])
    x_arr = np.asarray(x, dtype=float)
    n_r = refractive_index(susceptibility(np.asarray(eps_T_resonant(params, x_arr))))
    n_g = n_r + TWO_PI * omega_probe * np.asarray(dchi_dx_analytic(params, x_arr))
    return _finish(n_g, x)


@dataclass(frozen=True)
class SpectrumPoint:
    """One probe-detuning sample."""

    x: float
    eps_T: complex
    chi: complex
    n_r: complex
    dchi_dx: complex
    n_g: complex
    pole: bool = False


@dataclass(frozen=True)
class Spectrum:
    """Vectorized spectrum over an x-grid; ``pole`` flags limit-evaluated rows."""

    x: np.ndarray
    eps_T: np.ndarray
    chi: np.ndarray
    n_r: np.ndarray
    dchi_dx: np.ndarray
    n_g: np.ndarray
    pole: np.ndarray
    omega_probe: float

    def __len__(self) -> int:
        return len(self.x)

    def column(self, name: str) -> np.ndarray:
        key = name.strip().lower().replace("(", " ").replace(")", "").replace(" ", "_").replace("__", "_")
        if key == "x":
            return self.x
        part, _, quantity = key.partition("_")
        if part not in ("re", "im") or quantity not in ("eps_t", "chi", "n_r", "dchi_dx", "n_g"):
            raise ParameterDomainError(f"unknown column {name!r}; valid columns: {', '.join(COLUMNS)}", fields=["column"])
        values = getattr(self, "eps_T" if quantity == "eps_t" else quantity)
        return values.real if part == "re" else values.imag

    def columns(self) -> dict[str, np.ndarray]:
        return {name: self.column(name) for name in COLUMNS}

    def points(self) -> list[SpectrumPoint]:
        return [
            SpectrumPoint(
                x=float(self.x[i]),
                eps_T=complex(self.eps_T[i]),
                chi=complex(self.chi[i]),
                n_r=complex(self.n_r[i]),
                dchi_dx=complex(self.dchi_dx[i]),
                n_g=complex(self.n_g[i]),
                pole=bool(self.pole[i]),
            )
            for i in range(len(self))
        ]


def compute_spectrum(params: SystemParams, x: ArrayLike, omega_probe: float | None = None) -> Spectrum:
    """Evaluate the full eps_T -> chi -> n_r -> n_g chain on a grid."""
    if omega_probe is None:
        omega_probe = default_omega_probe(params)
    if not omega_probe > 0:
        raise ParameterDomainError(f"omega_probe must be positive, got {omega_probe}", fields=["omega_probe"])
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    eps = np.asarray(eps_T_resonant(params, x_arr))
    chi = susceptibility(eps)
    n_r = refractive_index(chi)
    dchi = np.asarray(dchi_dx_analytic(params, x_arr))
    n_g = n_r + TWO_PI * omega_probe * dchi
    return Spectrum(
        x=x_arr,
        eps_T=eps,
        chi=chi,
        n_r=n_r,
        dchi_dx=dchi,
        n_g=n_g,
        pole=pole_mask(params, x_arr),
        omega_probe=float(omega_probe),
    )
