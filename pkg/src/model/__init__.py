"""
Core optomechanical response model: parameters, closed-form responses, steady state.
"""

from src.model.params import MicroscopicParams, PoleConditions, SteadyState, SystemParams
from src.model.response import (
    c_plus_full,
    compute_beta,
    compute_N,
    eps_T_linearized,
    eps_T_resonant,
    pole_conditions,
    subfraction_denominator,
)
from src.model.steady_state import steady_state

__all__ = [
    "MicroscopicParams",
    "PoleConditions",
    "SteadyState",
    "SystemParams",
    "c_plus_full",
    "compute_beta",
    "compute_N",
    "eps_T_linearized",
    "eps_T_resonant",
    "pole_conditions",
    "steady_state",
    "subfraction_denominator",
]
