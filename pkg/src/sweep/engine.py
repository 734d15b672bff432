"""
Parameter-family sweeps over a probe-detuning grid.

A sweep evaluates one spectrum per value of the varied parameter, plus the
optional light-drag series. Series are independent and are mapped over a
bounded thread pool; results come back in the order of ``values``.
"""

from __future__ import annotations

import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import OPTICS_CONFIG, SWEEP_CONFIG

from src import __version__
from src.errors import SweepValidationError
from src.model.params import SystemParams
from src.optics.drag import DragConfig, DragMode, drag_profile, velocity_profile
from src.optics.indices import Spectrum, compute_spectrum, default_omega_probe

logger = logging.getLogger(__name__)

VariedName = Literal["gamma_m", "kappa", "omega_m", "beta", "v"]
BetaMode = Literal["fixed", "ideal"]

# Lower bound and whether it is strict, per varied parameter
_DOMAINS = {
    "gamma_m": (0.0, False),
    "kappa": (0.0, True),
    "omega_m": (0.0, True),
    "beta": (0.0, False),
    "v": (-math.inf, False),
}


class SweepSpec(BaseModel):
    """A parameter family evaluated on a shared x-grid.

    Field types are enforced on construction; domain constraints are collected
    by ``violations`` so that one error can name every offending field.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    base: SystemParams
    varied: VariedName
    values: tuple[float, ...]
    x_min: float
    x_max: float
    points: int = SWEEP_CONFIG["grid_points"]
    drag: DragConfig | None = None
    drag_mode: DragMode = OPTICS_CONFIG["drag_mode"]
    beta_mode: BetaMode = "fixed"
    omega_probe: float | None = None
    v_grid: tuple[float, ...] = ()
    drag_x_points: tuple[float, ...] = ()

    @classmethod
    def build(cls, **data) -> "SweepSpec":
        """Construct and check, raising SweepValidationError on any problem."""
        try:
            spec = cls(**data)
        except ValidationError as e:
            fields = sorted({".".join(str(part) for part in err["loc"]) for err in e.errors()})
            raise SweepValidationError(f"invalid sweep fields: {', '.join(fields)}", fields=fields) from e
        spec.check()
        return spec

    def violations(self) -> list[tuple[str, str]]:
        problems = []
        if not self.values:
            problems.append(("values", "must not be empty"))
        lower, strict = _DOMAINS[self.varied]
        for value in self.values:
            if not math.isfinite(value):
                problems.append(("values", f"non-finite value {value}"))
            elif value < lower or (strict and value == lower):
                problems.append(("values", f"{value} outside the domain of {self.varied}"))
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)) or self.x_min >= self.x_max:
            problems.append(("x_grid", f"need finite x_min < x_max, got [{self.x_min}, {self.x_max}]"))
        if self.points < 3:
            problems.append(("points", f"need at least 3 grid points, got {self.points}"))
        needs_drag = self.varied == "v" or bool(self.v_grid) or bool(self.drag_x_points)
        if needs_drag and self.drag is None:
            problems.append(("drag", "a drag configuration is required for velocity series"))
        if self.varied == "beta" and self.beta_mode == "ideal":
            problems.append(("beta_mode", "ideal mode overrides beta and cannot vary it"))
        if self.omega_probe is not None and not self.omega_probe > 0:
            problems.append(("omega_probe", f"must be positive, got {self.omega_probe}"))
        if any(not math.isfinite(v) for v in self.v_grid + self.drag_x_points):
            problems.append(("v_grid", "velocity grid and drag detunings must be finite"))
        return problems

    def check(self) -> None:
        problems = self.violations()
        if problems:
            fields = list(dict.fromkeys(name for name, _ in problems))
            message = "; ".join(f"{name}: {reason}" for name, reason in problems)
            raise SweepValidationError(message, fields=fields)

    def x_grid(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.points)

    def member(self, value: float) -> tuple[SystemParams, DragConfig | None]:
        """Parameters and drag configuration of one family member."""
        params = self.base
        if self.varied != "v":
            params = params.model_copy(update={self.varied: float(value)})
        if self.beta_mode == "ideal":
            params = params.ideal()
        drag = self.drag
        if drag is not None and self.varied == "v":
            drag = drag.with_velocity(value)
        return params, drag


@dataclass
class SeriesResult:
    """One family member: its spectrum, optional drag series and run metadata."""

    value: float
    params: SystemParams
    spectrum: Spectrum
    metadata: dict = field(default_factory=dict)
    drag_x: np.ndarray | None = None
    drag_singular: np.ndarray | None = None
    v_grid: np.ndarray | None = None
    drag_v: dict[float, np.ndarray] = field(default_factory=dict)


def _series_metadata(spec: SweepSpec, value: float, params: SystemParams, drag: DragConfig | None, omega_probe: float) -> dict:
    metadata = {
        "tool_version": __version__,
        "varied": spec.varied,
        "value": value,
        "kappa": params.kappa,
        "omega_m": params.omega_m,
        "gamma_m": params.gamma_m,
        "beta": params.beta,
        "unit_scale": params.unit_scale,
        "beta_mode": spec.beta_mode,
        "omega_probe": omega_probe,
        "x_min": spec.x_min,
        "x_max": spec.x_max,
        "points": spec.points,
    }
    if drag is not None:
        metadata.update(
            {"v": drag.v, "length": drag.length, "c_light": drag.c_light, "drag_mode": spec.drag_mode}
        )
    return metadata


def run_series(spec: SweepSpec, value: float) -> SeriesResult:
    params, drag = spec.member(value)
    omega_probe = spec.omega_probe or (drag.omega_probe if drag and drag.omega_probe else default_omega_probe(params))
    spectrum = compute_spectrum(params, spec.x_grid(), omega_probe)
    result = SeriesResult(
        value=float(value),
        params=params,
        spectrum=spectrum,
        metadata=_series_metadata(spec, float(value), params, drag, omega_probe),
    )
    if drag is not None:
        result.drag_x, result.drag_singular = drag_profile(spectrum.n_g, spectrum.n_r, drag, spec.drag_mode)
        if spec.v_grid:
            result.v_grid = np.asarray(spec.v_grid, dtype=float)
            for x in spec.drag_x_points:
                point = compute_spectrum(params, [x], omega_probe)
                result.drag_v[float(x)] = velocity_profile(
                    complex(point.n_g[0]), complex(point.n_r[0]), result.v_grid, drag, spec.drag_mode
                )
    return result


def run_sweep(spec: SweepSpec, workers: int | None = None) -> list[SeriesResult]:
    """Evaluate every family member; output order follows ``spec.values``."""
    spec.check()
    workers = workers or SWEEP_CONFIG["max_workers"]
    logger.info(f"Sweeping {spec.varied} over {len(spec.values)} values, {spec.points} grid points")
    if workers == 1 or len(spec.values) == 1:
        return [run_series(spec, value) for value in spec.values]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda value: run_series(spec, value), spec.values))
