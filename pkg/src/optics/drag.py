"""
Lateral light drag of a probe beam crossing a moving medium.

The default ``real-parts`` mode takes real parts before combining:
dx = (Re n_g - 1 / Re n_r) v l / c. The ``complex-then-real`` mode keeps
the complex indices and takes the real part of the result.
"""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Literal

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import DRAG_CONFIG, OPTICS_CONFIG

from src.errors import ParameterDomainError, SingularIndexError

logger = logging.getLogger(__name__)

DragMode = Literal["real-parts", "complex-then-real"]


class DragConfig(BaseModel):
    """Medium velocity, medium length and the speed of light, in SI units."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    v: float = Field(default=DRAG_CONFIG["velocity"], allow_inf_nan=False)
    length: float = Field(default=DRAG_CONFIG["length"], gt=0, allow_inf_nan=False)
    c_light: float = Field(default=DRAG_CONFIG["c_light"], gt=0, allow_inf_nan=False)
    omega_probe: float | None = Field(default=None, gt=0, allow_inf_nan=False)

    def with_velocity(self, v: float) -> "DragConfig":
        return self.model_copy(update={"v": float(v)})


def _check_mode(mode: str) -> None:
    if mode not in ("real-parts", "complex-then-real"):
        raise ParameterDomainError(f"unknown drag mode {mode!r}", fields=["drag_mode"])


def _drag_values(n_g: np.ndarray, n_r: np.ndarray, cfg: DragConfig, mode: str) -> tuple[np.ndarray, np.ndarray]:
    if mode == "real-parts":
        re_nr = n_r.real
        singular = re_nr == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            factor = n_g.real - 1 / re_nr
        values = factor * cfg.v * cfg.length / cfg.c_light
    else:
        singular = n_r == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            factor = n_g - 1 / n_r
        values = (factor * cfg.v * cfg.length / cfg.c_light).real
    return np.where(singular, np.nan, values), singular


def light_drag(n_g: complex, n_r: complex, cfg: DragConfig, mode: DragMode | None = None) -> float:
    """Lateral displacement of the probe beam for one (n_g, n_r) pair."""
    mode = mode or OPTICS_CONFIG["drag_mode"]
    _check_mode(mode)
    values, singular = _drag_values(np.asarray(n_g, dtype=complex), np.asarray(n_r, dtype=complex), cfg, mode)
    if singular:
        raise SingularIndexError("real part of the refractive index is zero", fields=["n_r"])
    return float(values)


def drag_profile(
    n_g: ArrayLike, n_r: ArrayLike, cfg: DragConfig, mode: DragMode | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Drag over a series of indices.

    Returns the displacements and a mask of singular rows, which hold NaN
    instead of being dropped.
    """
    mode = mode or OPTICS_CONFIG["drag_mode"]
    _check_mode(mode)
    values, singular = _drag_values(np.asarray(n_g, dtype=complex), np.asarray(n_r, dtype=complex), cfg, mode)
    if np.any(singular):
        logger.warning(f"{int(np.sum(singular))} singular rows in drag series (Re n_r = 0)")
    return values, singular


def velocity_profile(
    n_g: complex, n_r: complex, velocities: ArrayLike, cfg: DragConfig, mode: DragMode | None = None
) -> np.ndarray:
    """Drag at one detuning as a function of medium velocity; odd in v."""
    unit = cfg.with_velocity(1.0)
    slope = light_drag(n_g, n_r, unit, mode)
    return slope * np.asarray(velocities, dtype=float)
