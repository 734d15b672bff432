"""
Perturbative steady state of the driven optomechanical cavity.

Amplitudes are expanded to first order in the probe amplitude,
<s> = s0 + eps_p e^{-i delta t} s_+ + eps_p^* e^{i delta t} s_-, and the
probe amplitude is normalized to one.
"""

from __future__ import annotations

import logging

import numpy as np

from src.errors import DegenerateRelationError, NumericalDomainError
from src.model.params import MicroscopicParams, SteadyState, SystemParams
from src.model.response import c_plus_full, compute_beta

logger = logging.getLogger(__name__)

CONJUGATE_RTOL = 1e-12


def steady_state(
    params: SystemParams, micro: MicroscopicParams, Delta: float, delta: float
) -> SteadyState:
    """Mean displacement, intracavity amplitude and first-order sidebands.

    beta is derived from ``micro`` so that the record is self-consistent;
    ``params.beta`` is ignored. chi_0 is taken as hbar * g_m.
    """
    kappa, omega_m, gamma_m = params.kappa, params.omega_m, params.gamma_m
    m, hbar, chi_0 = micro.mass, micro.hbar, micro.chi_0

    beta = compute_beta(micro, kappa, omega_m)
    c0 = micro.pump_amplitude / complex(kappa, Delta)
    c0_sq = abs(c0) ** 2
    q0 = chi_0 * c0_sq / (m * omega_m**2)

    mech_plus = omega_m**2 - 1j * delta * gamma_m - delta**2
    mech_minus = omega_m**2 + 1j * delta * gamma_m - delta**2
    if mech_plus == 0:
        raise NumericalDomainError("undamped mechanical resonance: q_+ diverges", fields=["gamma_m", "delta"])
    M = -1j * c0_sq * chi_0**2 / (m * hbar * mech_plus * (kappa - 1j * (Delta + delta)))
    if abs(1 - M) <= np.finfo(float).eps:
        raise DegenerateRelationError(f"M = {M!r} makes the sideband relation singular", fields=["M"])

    c_plus = c_plus_full(params.with_beta(beta), Delta, delta)
    if c0 == 0:
        c_minus = 0j
    else:
        # c0 c_-^* = M / (1 - M) c0^* c_+
        c_minus = np.conj(M / (1 - M) * np.conj(c0) * c_plus / c0)
    c_minus = complex(c_minus)

    q_plus = chi_0 * (c0 * np.conj(c_minus) + np.conj(c0) * c_plus) / (m * mech_plus)
    q_minus = chi_0 * (c0 * np.conj(c_plus) + np.conj(c0) * c_minus) / (m * mech_minus)
    q_plus, q_minus = complex(q_plus), complex(q_minus)

    mismatch = abs(q_plus - np.conj(q_minus))
    if mismatch > CONJUGATE_RTOL * max(abs(q_plus), np.finfo(float).tiny):
        raise NumericalDomainError(
            f"q_+ and conj(q_-) disagree by {mismatch:.3e}", fields=["q_plus", "q_minus"]
        )

    logger.debug(f"steady state at Delta={Delta}, delta={delta}: |c0|={abs(c0):.6e}, M={M:.3e}")
    return SteadyState(
        q0=q0,
        c0=c0,
        c_plus=c_plus,
        c_minus=c_minus,
        q_plus=q_plus,
        q_minus=q_minus,
        M=complex(M),
        chi_0=chi_0,
        beta=beta,
        kappa=kappa,
        Delta=Delta,
        delta=delta,
    )
