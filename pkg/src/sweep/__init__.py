"""
Parameter-family sweeps, figure presets and dip/extremum location.
"""

from src.sweep.engine import SeriesResult, SweepSpec, run_series, run_sweep
from src.sweep.extrema import (
    Dip,
    Extremum,
    enhancement_ratio,
    extremum_pair,
    gain_absorption_balance,
    locate_dip,
    spectrum_summary,
)
from src.sweep.presets import figure_names, figure_preset, velocity_grid

__all__ = [
    "Dip",
    "Extremum",
    "SeriesResult",
    "SweepSpec",
    "enhancement_ratio",
    "extremum_pair",
    "figure_names",
    "figure_preset",
    "gain_absorption_balance",
    "locate_dip",
    "run_series",
    "run_sweep",
    "spectrum_summary",
    "velocity_grid",
]
