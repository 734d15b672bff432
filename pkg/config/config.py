"""
Centralized configuration for the optomechanical light-drag toolkit.
"""

from pathlib import Path

from scipy import constants

# Project root directory
PROJECT_ROOT = Path(__file__).parent.parent

# Data paths
DATA_DIR = PROJECT_ROOT / "data"
OUTPUT_DIR = DATA_DIR / "output"

# Core-model configuration
MODEL_CONFIG = {
    "unit_scale": "gamma_m",
    # A nested denominator counts as zero below max(atol, rtol * term scale)
    "pole_atol": 1e-300,
    "pole_rtol": 64 * 2.220446049250313e-16,
}

# Optics configuration
OPTICS_CONFIG = {
    "omega_probe_factor": 1e4,   # omega_probe = factor * omega_m
    "fd_gamma_step": 1e-6,       # default h = max(fd_gamma_step * gamma_m, fd_x_step * |x|)
    "fd_x_step": 1e-9,
    "drag_mode": "real-parts",
}

# Light-drag configuration
DRAG_CONFIG = {
    "c_light": constants.c,
    "length": 1.0,               # metres; drag is linear in l, so 1 m reads as drag per metre
    "velocity": 2.0,             # m/s
    "v_grid": (-4.0, 4.0, 81),
}

# Sweep configuration
SWEEP_CONFIG = {
    "grid_points": 2001,
    "grid_half_width": 3.0,      # in units of the largest gamma_m of the family
    "max_workers": 4,
}

# Embedded invariant suite
SELFCHECK_CONFIG = {
    "draws": 1000,
    "seed": 1234,
    "derivative_rtol": 1e-6,
    "full_response_rtol": 1e-3,
    "conjugate_rtol": 1e-12,
}

# Output formats
OUTPUT_CONFIG = {
    "formats": ("csv", "json"),
    "comment_prefix": "# ",
    "convention": (
        "re_n_r is labelled absorption and im_n_r dispersion; "
        "this inverts the common optics convention"
    ),
}

# Figure preset taxonomy
FIGURE_PRESETS = {
    "fig2": {
        "varied": "gamma_m",
        "values": [0.5, 1.0, 1.5, 2.0],
        "drag": False,
        "description": "Refractive and group index for several mechanical damping rates, kappa = omega_m",
    },
    "fig3": {
        "varied": "gamma_m",
        "values": [0.5, 1.0, 1.5, 2.0],
        "drag": True,
        "description": "Light drag versus x and v for several mechanical damping rates",
    },
    "fig4": {
        "varied": "kappa",
        "values": [5000.0, 10000.0, 20000.0],
        "drag": False,
        "description": "Refractive and group index for several cavity decay rates, gamma_m = 1e-4 omega_m",
    },
    "fig5": {
        "varied": "kappa",
        "values": [5000.0, 10000.0, 20000.0],
        "drag": True,
        "description": "Light drag versus x and v for several cavity decay rates",
    },
    "fig6": {
        "varied": "omega_m",
        "values": [5000.0, 7000.0, 11000.0],
        "drag": False,
        "description": "Refractive and group index for several mechanical frequencies (absolute units)",
    },
    "fig7": {
        "varied": "omega_m",
        "values": [5000.0, 7000.0, 11000.0],
        "drag": True,
        "description": "Light drag versus x and v for several mechanical frequencies (absolute units)",
    },
    "fig8": {
        "varied": "v",
        "values": [-4.0, -2.0, 2.0, 4.0],
        "drag": True,
        "description": "Light drag versus x for several medium velocities and versus v at fixed detunings",
    },
}


def ensure_directories():
    """Create all necessary directories if they don't exist."""
    for dir_path in [DATA_DIR, OUTPUT_DIR]:
        dir_path.mkdir(parents=True, exist_ok=True)
