"""
Named parameter families for the published spectrum and drag studies.

Every preset runs in ideal beta mode: each member sits at the transparency
drive strength of its own parameter set.
"""

import logging
import sys
from pathlib import Path

import numpy as np

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import DRAG_CONFIG, FIGURE_PRESETS, OPTICS_CONFIG, SWEEP_CONFIG

from src.errors import ParameterDomainError
from src.model.params import SystemParams
from src.optics.drag import DragConfig
from src.sweep.engine import SweepSpec

logger = logging.getLogger(__name__)

# Base parameter sets; the varied field is overwritten per member
_BASES = {
    # kappa = omega_m, frequencies in units of gamma_m
    "gamma_m": SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0),
    # gamma_m = 1e-4 omega_m
    "kappa": SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0),
    # absolute angular frequencies, kappa fixed to the middle omega_m
    "omega_m": SystemParams(kappa=7000.0, omega_m=7000.0, gamma_m=0.7, unit_scale="rad/s"),
    "v": SystemParams(kappa=1e4, omega_m=1e4, gamma_m=1.0),
}

# Detunings (in units of gamma_m) at which drag is sampled against velocity
DRAG_X_POINTS = (0.3, -1.0)


def velocity_grid(v_min: float, v_max: float, points: int) -> tuple[float, ...]:
    """Evenly spaced velocities; a symmetric range is made exactly antisymmetric."""
    grid = np.linspace(v_min, v_max, points)
    if v_min == -v_max:
        grid = (grid - grid[::-1]) / 2
    return tuple(float(v) for v in grid)


def figure_names() -> list[str]:
    return sorted(FIGURE_PRESETS)


def figure_preset(
    name: str,
    points: int | None = None,
    length: float | None = None,
    omega_probe: float | None = None,
    drag_mode: str | None = None,
) -> SweepSpec:
    """Return the sweep reproducing one figure study.

    ``length`` and ``omega_probe`` are left unstated by the study; they
    default to 1 m and 1e4 * omega_m and are echoed in every output.
    """
    if name not in FIGURE_PRESETS:
        raise ParameterDomainError(
            f"unknown figure {name!r}; valid names: {', '.join(figure_names())}", fields=["name"]
        )
    preset = FIGURE_PRESETS[name]
    varied = preset["varied"]
    base = _BASES[varied]
    half_width = SWEEP_CONFIG["grid_half_width"] * (max(preset["values"]) if varied == "gamma_m" else base.gamma_m)

    drag = None
    v_grid = ()
    drag_x_points = ()
    if preset["drag"]:
        drag = DragConfig(length=length if length is not None else DRAG_CONFIG["length"])
        v_min, v_max, v_points = DRAG_CONFIG["v_grid"]
        v_grid = velocity_grid(v_min, v_max, v_points)
        drag_x_points = tuple(x * base.gamma_m for x in DRAG_X_POINTS)

    logger.info(f"Preset {name}: vary {varied} over {preset['values']}")
    return SweepSpec.build(
        base=base,
        varied=varied,
        values=tuple(preset["values"]),
        x_min=-half_width,
        x_max=half_width,
        points=points or SWEEP_CONFIG["grid_points"],
        drag=drag,
        drag_mode=drag_mode or OPTICS_CONFIG["drag_mode"],
        beta_mode="ideal",
        omega_probe=omega_probe,
        v_grid=v_grid,
        drag_x_points=drag_x_points,
    )
