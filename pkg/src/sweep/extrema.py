"""
Dip and extremum location on computed series.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass

import numpy as np

from src.errors import ParameterDomainError
from src.model.response import eps_T_resonant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Dip:
    """Grid minimum of a column and its parabolic refinement."""

    column: str
    index: int
    x_raw: float
    value_raw: float
    x: float
    value: float
    boundary: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class Extremum:
    column: str
    x: float
    value: float
    boundary: bool = False


def _spectrum(series):
    return getattr(series, "spectrum", series)


def _column(series, column: str) -> tuple[np.ndarray, np.ndarray]:
    spectrum = _spectrum(series)
    x = np.asarray(spectrum.x, dtype=float)
    if len(x) < 3:
        raise ParameterDomainError(f"need at least 3 grid points, got {len(x)}", fields=["x_grid"])
    return x, np.asarray(spectrum.column(column), dtype=float)


def refine_minimum(x: np.ndarray, y: np.ndarray, i: int) -> tuple[float, float]:
    """Vertex of the parabola through points i-1, i, i+1, kept within one grid step."""
    d0, d2 = x[i - 1] - x[i], x[i + 1] - x[i]
    e0, e2 = y[i - 1] - y[i], y[i + 1] - y[i]
    det = d0 * d2 * (d2 - d0)
    a = (e2 * d0 - e0 * d2) / det
    b = (e0 * d2**2 - e2 * d0**2) / det
    if not a > 0:
        return float(x[i]), float(y[i])
    t = min(max(-b / (2 * a), d0), d2)
    return float(x[i] + t), float(y[i] + b * t + a * t**2)


def locate_dip(series, column: str = "Re n_r") -> Dip:
    x, y = _column(series, column)
    i = int(np.nanargmin(y))
    if i == 0 or i == len(x) - 1:
        logger.warning(f"Minimum of {column} at grid boundary x={x[i]}; no interior dip")
        return Dip(column, i, float(x[i]), float(y[i]), float(x[i]), float(y[i]), boundary=True)
    x_ref, y_ref = refine_minimum(x, y, i)
    return Dip(column, i, float(x[i]), float(y[i]), x_ref, y_ref)


def extremum_pair(series, column: str = "Im n_g") -> tuple[Extremum, Extremum]:
    """Signed minimum and maximum of a column with their grid positions."""
    x, y = _column(series, column)
    last = len(x) - 1
    pair = []
    for i in (int(np.nanargmin(y)), int(np.nanargmax(y))):
        boundary = i in (0, last)
        if boundary:
            logger.warning(f"Extremum of {column} at grid boundary x={x[i]}")
        pair.append(Extremum(column, float(x[i]), float(y[i]), boundary))
    return pair[0], pair[1]


def enhancement_ratio(series_a, series_b, column: str = "Im n_g") -> float:
    """|min| of series_a over |min| of series_b."""
    low_a, _ = extremum_pair(series_a, column)
    low_b, _ = extremum_pair(series_b, column)
    if low_b.value == 0:
        raise ParameterDomainError(f"minimum of {column} vanishes in the reference series", fields=[column])
    return abs(low_a.value) / abs(low_b.value)


def gain_absorption_balance(series) -> float:
    """|min + max| / (max - min) of Re(n_g) - 1; near 0 when gain mirrors absorption."""
    low, high = extremum_pair(series, "Re n_g")
    spread = high.value - low.value
    if spread == 0:
        return 0.0
    return abs((low.value - 1) + (high.value - 1)) / spread


def spectrum_summary(series, x_probe: float | None = None) -> dict:
    """Dips, group-index extrema and, optionally, the absorbed fraction at one detuning."""
    dip = locate_dip(series, "Re n_r")
    low, high = extremum_pair(series, "Im n_g")
    summary = {
        "dip_re_n_r": dip.to_dict(),
        "dip_im_n_g": locate_dip(series, "Im n_g").to_dict(),
        "min_im_n_g": asdict(low),
        "max_im_n_g": asdict(high),
        "gain_absorption_balance": gain_absorption_balance(series),
    }
    params = getattr(series, "params", None)
    if x_probe is not None and params is not None:
        # Re(eps_T)/2 is 1 for the undriven cavity on resonance
        summary["absorption_fraction"] = float(eps_T_resonant(params, x_probe).real / 2)
        summary["x_probe"] = float(x_probe)
    return summary
