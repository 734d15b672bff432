"""
Parameter and result records for the cavity optomechanics model.

Input records are validated pydantic models; computed records are plain
frozen dataclasses.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field
from scipy import constants

from src.errors import ParameterDomainError

UnitScale = Literal["gamma_m", "rad/s"]


class SystemParams(BaseModel):
    """Cavity and mechanics parameters entering the resonant response.

    All four rates share one unit convention, named by ``unit_scale``:
    ``gamma_m`` means frequencies are expressed in units of the mechanical
    damping rate, ``rad/s`` means absolute angular frequencies.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    kappa: float = Field(gt=0, allow_inf_nan=False, description="cavity field decay rate")
    omega_m: float = Field(gt=0, allow_inf_nan=False, description="mechanical frequency")
    gamma_m: float = Field(ge=0, allow_inf_nan=False, description="mechanical damping rate")
    beta: float = Field(default=0.0, ge=0, allow_inf_nan=False, description="effective drive strength")
    unit_scale: UnitScale = "gamma_m"

    def with_beta(self, beta: float) -> "SystemParams":
        return self.model_copy(update={"beta": float(beta)})

    def ideal(self) -> "SystemParams":
        """Copy with beta set to the transparency value beta_0 of this parameter set."""
        return self.with_beta(self.gamma_m * (4 * self.omega_m**2 + self.kappa**2) / (2 * self.kappa))


class MicroscopicParams(BaseModel):
    """Microscopic inputs from which beta is derived.

    g_m = omega_c / L is the optomechanical coupling constant and
    Lambda = 2 m omega_m / hbar is recomputed on demand, never stored.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    g_m: float = Field(gt=0, allow_inf_nan=False)
    pump_amplitude: float = Field(ge=0, allow_inf_nan=False)
    mass: float = Field(gt=0, allow_inf_nan=False)
    hbar: float = Field(default=constants.hbar, gt=0, allow_inf_nan=False)

    @classmethod
    def from_cavity(
        cls, omega_c: float, length: float, pump_amplitude: float, mass: float, hbar: float = constants.hbar
    ) -> "MicroscopicParams":
        """Build from the cavity resonance and cavity length (g_m = omega_c / L)."""
        if omega_c <= 0 or length <= 0:
            raise ParameterDomainError("omega_c and length must be positive", fields=["omega_c", "length"])
        return cls(g_m=omega_c / length, pump_amplitude=pump_amplitude, mass=mass, hbar=hbar)

    def lambda_factor(self, omega_m: float) -> float:
        return 2 * self.mass * omega_m / self.hbar

    @property
    def chi_0(self) -> float:
        # Radiation-pressure coupling; identified with hbar * g_m
        return self.hbar * self.g_m


@dataclass(frozen=True)
class PoleConditions:
    """Operating point where the response subfraction diverges.

    ``x0`` is the quoted closed-form offset -omega_m gamma_m / (2 kappa).
    ``x_pole`` is the root of gamma_m/2 - i x + N at beta = beta0, which
    equals -omega_m gamma_m / kappa.
    """

    x0: float
    beta0: float
    x_pole: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class SteadyState:
    """Zeroth- and first-order steady-state amplitudes."""

    q0: float
    c0: complex
    c_plus: complex
    c_minus: complex
    q_plus: complex
    q_minus: complex
    M: complex
    chi_0: float
    beta: float
    kappa: float
    Delta: float
    delta: float

    @property
    def eps_T(self) -> complex:
        """Output-field response at the probe frequency, 2 kappa c_+ for unit probe amplitude."""
        return 2 * self.kappa * self.c_plus

    def to_dict(self) -> dict:
        record = asdict(self)
        record["eps_T"] = self.eps_T
        return record
