"""
Optical observables of the cavity output field: susceptibility, refractive and
group indices, and the lateral light drag of a moving medium.
"""

from src.optics.drag import DragConfig, DragMode, drag_profile, light_drag, velocity_profile
from src.optics.indices import (
    COLUMNS,
    Spectrum,
    SpectrumPoint,
    compute_spectrum,
    dchi_dx_analytic,
    dchi_dx_fd,
    default_fd_step,
    default_omega_probe,
    group_index,
    refractive_index,
    susceptibility,
)

__all__ = [
    "COLUMNS",
    "DragConfig",
    "DragMode",
    "Spectrum",
    "SpectrumPoint",
    "compute_spectrum",
    "dchi_dx_analytic",
    "dchi_dx_fd",
    "default_fd_step",
    "default_omega_probe",
    "drag_profile",
    "group_index",
    "light_drag",
    "refractive_index",
    "susceptibility",
    "velocity_profile",
]
