"""
Command-line front end: spectrum, drag, poles, sweep, figure, selfcheck, replay.

Every file written begins with the run configuration that produced it, so
``replay <file>`` regenerates the file byte for byte.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError

# Add project root to path for config import
sys.path.append(str(Path(__file__).parent.parent.parent))
from config.config import (
    DRAG_CONFIG,
    FIGURE_PRESETS,
    OPTICS_CONFIG,
    OUTPUT_CONFIG,
    OUTPUT_DIR,
    SWEEP_CONFIG,
    ensure_directories,
)

from src import __version__
from src.cli.selfcheck import run_selfcheck
from src.cli.writers import RUN_CONFIG_KEY, Document, Table, read_run_config, write_document
from src.errors import OptomechError, ParameterDomainError
from src.model import SystemParams, eps_T_resonant, pole_conditions
from src.model.params import UnitScale
from src.optics import COLUMNS, DragConfig, DragMode, compute_spectrum, default_omega_probe, drag_profile, velocity_profile
from src.sweep import SeriesResult, SweepSpec, enhancement_ratio, figure_preset, run_sweep, spectrum_summary
from src.sweep.engine import VariedName
from src.sweep.presets import velocity_grid

logger = logging.getLogger(__name__)

DRAG_CONVENTION = "dx = (Re n_g - 1/Re n_r) v l / c; positive dx points along +v"
COMPLEX_DRAG_CONVENTION = "dx = Re((n_g - 1/n_r) v l / c); positive dx points along +v"


class RunConfig(BaseModel):
    """Everything one invocation needs; echoed verbatim into its output."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Literal["spectrum", "drag", "poles", "sweep", "figure", "selfcheck"]
    kappa: float = 1e4
    omega_m: float = 1e4
    gamma_m: float = 1.0
    beta: float = 0.0
    beta_ideal: bool = False
    unit_scale: UnitScale = "gamma_m"
    x_min: float | None = None
    x_max: float | None = None
    points: int = SWEEP_CONFIG["grid_points"]
    omega_probe: float | None = None
    v: float = DRAG_CONFIG["velocity"]
    length: float = DRAG_CONFIG["length"]
    drag_mode: DragMode = OPTICS_CONFIG["drag_mode"]
    sweep_over: Literal["x", "v"] = "x"
    detuning: float = 0.0
    v_min: float = DRAG_CONFIG["v_grid"][0]
    v_max: float = DRAG_CONFIG["v_grid"][1]
    v_points: int = DRAG_CONFIG["v_grid"][2]
    vary: VariedName | None = None
    values: tuple[float, ...] = ()
    with_drag: bool = False
    figure: str | None = None
    format: Literal["csv", "json"] = "csv"

    def system_params(self) -> SystemParams:
        params = SystemParams(
            kappa=self.kappa,
            omega_m=self.omega_m,
            gamma_m=self.gamma_m,
            beta=self.beta,
            unit_scale=self.unit_scale,
        )
        return params.ideal() if self.beta_ideal else params

    def drag_config(self) -> DragConfig:
        return DragConfig(v=self.v, length=self.length, omega_probe=self.omega_probe)

    def x_bounds(self) -> tuple[float, float]:
        scale = max(self.values) if self.vary == "gamma_m" and self.values else self.gamma_m
        half_width = SWEEP_CONFIG["grid_half_width"] * scale
        x_min = -half_width if self.x_min is None else self.x_min
        x_max = half_width if self.x_max is None else self.x_max
        return x_min, x_max

    def x_grid(self) -> np.ndarray:
        x_min, x_max = self.x_bounds()
        if not x_min < x_max or self.points < 3:
            raise ParameterDomainError("need x_min < x_max and at least 3 points", fields=["x_min", "x_max", "points"])
        return np.linspace(x_min, x_max, self.points)


def _params_dict(params: SystemParams, omega_probe: float) -> dict:
    return {**params.model_dump(), "omega_probe": omega_probe}


FIGURE_FIELDS = {"command", "figure", "points", "omega_probe", "length", "drag_mode", "format"}


def _base_metadata(config: RunConfig) -> dict:
    include = FIGURE_FIELDS if config.command == "figure" else None
    return {
        "tool_version": __version__,
        "command": config.command,
        RUN_CONFIG_KEY: config.model_dump(mode="json", include=include),
        "convention": OUTPUT_CONFIG["convention"],
    }


def _spectrum_rows(spectrum) -> list[list]:
    columns = [spectrum.column(name) for name in COLUMNS]
    return [[float(column[i]) for column in columns] + [bool(spectrum.pole[i])] for i in range(len(spectrum))]


def cmd_spectrum(config: RunConfig) -> Document:
    params = config.system_params()
    omega_probe = config.omega_probe or default_omega_probe(params)
    spectrum = compute_spectrum(params, config.x_grid(), omega_probe)
    if spectrum.pole.any():
        logger.warning(f"{int(spectrum.pole.sum())} grid points evaluated at the transparency pole limit")
    table = Table("spectrum", list(COLUMNS) + ["pole"], _spectrum_rows(spectrum), _params_dict(params, omega_probe))
    return Document(_base_metadata(config), [table])


def cmd_drag(config: RunConfig) -> Document:
    params = config.system_params()
    cfg = config.drag_config()
    omega_probe = config.omega_probe or default_omega_probe(params)
    metadata = _base_metadata(config)
    metadata["drag_convention"] = DRAG_CONVENTION if config.drag_mode == "real-parts" else COMPLEX_DRAG_CONVENTION
    table_params = {**_params_dict(params, omega_probe), "v": cfg.v, "length": cfg.length, "c_light": cfg.c_light}

    if config.sweep_over == "x":
        spectrum = compute_spectrum(params, config.x_grid(), omega_probe)
        drag, singular = drag_profile(spectrum.n_g, spectrum.n_r, cfg, config.drag_mode)
        rows = [[float(spectrum.x[i]), float(drag[i]), bool(singular[i])] for i in range(len(spectrum))]
        return Document(metadata, [Table("drag", ["x", "drag", "singular"], rows, table_params)])

    point = compute_spectrum(params, [config.detuning], omega_probe)
    velocities = np.asarray(velocity_grid(config.v_min, config.v_max, config.v_points))
    drag = velocity_profile(complex(point.n_g[0]), complex(point.n_r[0]), velocities, cfg, config.drag_mode)
    rows = [[float(v), float(d)] for v, d in zip(velocities, drag)]
    table_params["x"] = config.detuning
    return Document(metadata, [Table("drag", ["v", "drag"], rows, table_params)])


def poles_report(config: RunConfig) -> dict:
    params = config.system_params()
    poles = pole_conditions(params)
    at_pole = params.with_beta(poles.beta0)
    return {
        **poles.to_dict(),
        "abs_eps_T_at_pole": abs(eps_T_resonant(at_pole, poles.x_pole)),
        "abs_eps_T_at_x0": abs(eps_T_resonant(at_pole, poles.x0)),
        "unit_scale": params.unit_scale,
    }


def _series_tables(results: list[SeriesResult]) -> list[Table]:
    tables = []
    for series in results:
        spectrum = series.spectrum
        columns = list(COLUMNS) + ["pole"]
        rows = _spectrum_rows(spectrum)
        if series.drag_x is not None:
            columns += ["drag", "drag_singular"]
            rows = [row + [float(series.drag_x[i]), bool(series.drag_singular[i])] for i, row in enumerate(rows)]
        tables.append(Table("spectrum", columns, rows, dict(series.metadata), series.value))
    for series in results:
        if series.drag_v:
            rows = [
                [float(x), float(v), float(drag[j])]
                for x, drag in series.drag_v.items()
                for j, v in enumerate(series.v_grid)
            ]
            tables.append(Table("velocity", ["x", "v", "drag"], rows, dict(series.metadata), series.value))
    return tables


def _sweep_document(config: RunConfig, spec: SweepSpec, workers: int | None = None) -> tuple[Document, list[SeriesResult]]:
    results = run_sweep(spec, workers)
    metadata = _base_metadata(config)
    metadata["varied"] = spec.varied
    if spec.drag is not None:
        metadata["drag_convention"] = DRAG_CONVENTION if spec.drag_mode == "real-parts" else COMPLEX_DRAG_CONVENTION
    return Document(metadata, _series_tables(results)), results


def sweep_spec(config: RunConfig) -> SweepSpec:
    if config.vary is None:
        raise ParameterDomainError("sweep needs --vary and --values", fields=["vary"])
    x_min, x_max = config.x_bounds()
    needs_drag = config.with_drag or config.vary == "v"
    return SweepSpec.build(
        base=config.system_params(),
        varied=config.vary,
        values=config.values,
        x_min=x_min,
        x_max=x_max,
        points=config.points,
        drag=config.drag_config() if needs_drag else None,
        drag_mode=config.drag_mode,
        beta_mode="ideal" if config.beta_ideal else "fixed",
        omega_probe=config.omega_probe,
    )


def figure_spec(config: RunConfig) -> SweepSpec:
    return figure_preset(
        config.figure,
        points=config.points,
        length=config.length,
        omega_probe=config.omega_probe,
        drag_mode=config.drag_mode,
    )


def print_figure_summary(name: str, results: list[SeriesResult]) -> None:
    print("\n" + "=" * 80)
    print(f"{name}: {FIGURE_PRESETS[name]['description']}")
    print("=" * 80)
    for series in results:
        summary = spectrum_summary(series, x_probe=series.params.gamma_m)
        dip = summary["dip_re_n_r"]
        print(
            f"{series.metadata['varied']}={series.value:g}  "
            f"dip Re(n_r) at x={dip['x']:.6g} ({dip['value']:.6g})  "
            f"Im(n_g) in [{summary['min_im_n_g']['value']:.6g}, {summary['max_im_n_g']['value']:.6g}]  "
            f"gain/absorption balance {summary['gain_absorption_balance']:.3g}  "
            f"absorbed fraction at x={summary['x_probe']:.6g} {summary['absorption_fraction']:.4g}"
        )
    if len(results) > 1 and results[0].metadata["varied"] != "v":
        ratio = enhancement_ratio(results[0], results[-1])
        print(f"|min Im(n_g)| ratio first/last: {ratio:.4g}")


def print_selfcheck(results) -> None:
    print("\n" + "=" * 80)
    print("SELFCHECK")
    print("=" * 80)
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] {result.name}: measured {result.measured:.3e} (tolerance {result.tolerance:.3e}) {result.detail}")


def execute(config: RunConfig, out: Path | None) -> int:
    """Run one configuration; returns the exit code."""
    if config.command == "selfcheck":
        results = run_selfcheck()
        print_selfcheck(results)
        return 0 if all(result.passed for result in results) else 2

    if config.command == "poles":
        report = poles_report(config)
        if config.format == "json":
            print(json.dumps(report, indent=2))
        else:
            for key, value in report.items():
                print(f"{key}={value!r}" if isinstance(value, float) else f"{key}={value}")
        return 0

    if config.command == "spectrum":
        document = cmd_spectrum(config)
    elif config.command == "drag":
        document = cmd_drag(config)
    elif config.command == "sweep":
        document, _ = _sweep_document(config, sweep_spec(config))
    else:
        if out is None:
            ensure_directories()
            out = OUTPUT_DIR / f"{config.figure}.{config.format}"
        document, results = _sweep_document(config, figure_spec(config))
        print_figure_summary(config.figure, results)
    write_document(document, config.format, out)
    return 0


class CliArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors surface as validation errors (exit 1)."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParameterDomainError(f"{self.prog}: {message}", fields=_flag_names(message))


def _flag_names(message: str) -> list[str]:
    return sorted({word.strip(",:'\"").lstrip("-").replace("-", "_") for word in message.split() if word.startswith("--")})


def _add_system(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("system parameters")
    group.add_argument("--kappa", type=float, default=1e4, help="cavity decay rate")
    group.add_argument("--omega-m", type=float, default=1e4, help="mechanical frequency")
    group.add_argument("--gamma-m", type=float, default=1.0, help="mechanical damping rate")
    beta = group.add_mutually_exclusive_group()
    beta.add_argument("--beta", type=float, default=0.0, help="effective drive strength")
    beta.add_argument("--beta-ideal", action="store_true", help="use the transparency drive beta_0")
    group.add_argument("--unit-scale", choices=["gamma_m", "rad/s"], default="gamma_m")


def _add_output(parser: argparse.ArgumentParser, bounds: bool = True) -> None:
    grid = parser.add_argument_group("grid and output")
    if bounds:
        grid.add_argument("--x-min", type=float, help="grid start (default -3 gamma_m, largest swept gamma_m)")
        grid.add_argument("--x-max", type=float, help="grid end (default 3 gamma_m, largest swept gamma_m)")
    grid.add_argument("--points", type=int, default=SWEEP_CONFIG["grid_points"])
    grid.add_argument("--omega-probe", type=float, help="probe frequency in n_g (default 1e4 omega_m)")
    grid.add_argument("--format", choices=OUTPUT_CONFIG["formats"], default="csv")
    grid.add_argument("--out", type=Path, help="output file (default: standard output, data/output/<name> for figure)")


def _add_drag(parser: argparse.ArgumentParser, velocity: bool = True) -> None:
    drag = parser.add_argument_group("light drag")
    if velocity:
        drag.add_argument("--v", type=float, default=DRAG_CONFIG["velocity"], help="medium velocity, m/s")
    drag.add_argument("--length", type=float, default=DRAG_CONFIG["length"], help="medium length, m")
    drag.add_argument("--drag-mode", choices=["real-parts", "complex-then-real"], default=OPTICS_CONFIG["drag_mode"])


def _add_common(parser: argparse.ArgumentParser) -> None:
    _add_system(parser)
    _add_output(parser)
    _add_drag(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = CliArgumentParser(
        prog="omit-drag",
        description="Optomechanically induced transparency spectra and light drag.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--quiet", action="store_true", help="only log warnings and errors")
    verbosity.add_argument("--verbose", action="store_true", help="log debug output")
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("spectrum", help="eps_T, chi, n_r, dchi/dx and n_g over an x-grid"))

    drag = sub.add_parser("drag", help="light drag against detuning or velocity")
    _add_common(drag)
    drag.add_argument("--sweep-over", choices=["x", "v"], default="x")
    drag.add_argument("--detuning", type=float, default=0.0, help="x at which a velocity sweep is taken")
    drag.add_argument("--v-min", type=float, default=DRAG_CONFIG["v_grid"][0])
    drag.add_argument("--v-max", type=float, default=DRAG_CONFIG["v_grid"][1])
    drag.add_argument("--v-points", type=int, default=DRAG_CONFIG["v_grid"][2])

    _add_common(sub.add_parser("poles", help="transparency operating point x_0, x_pole and beta_0"))

    sweep = sub.add_parser("sweep", help="spectra for a family of one varied parameter")
    _add_common(sweep)
    sweep.add_argument("--vary", required=True, choices=["gamma_m", "kappa", "omega_m", "beta", "v"])
    sweep.add_argument("--values", required=True, type=float, nargs="+")
    sweep.add_argument("--with-drag", action="store_true", help="add the drag column")

    # Presets fix the system parameters, grid bounds and velocity
    figure = sub.add_parser("figure", help="run a named figure preset")
    figure.add_argument("name", choices=sorted(FIGURE_PRESETS))
    _add_output(figure, bounds=False)
    _add_drag(figure, velocity=False)

    sub.add_parser("selfcheck", help="run the embedded invariant suite")

    replay = sub.add_parser("replay", help="regenerate an output file from its echoed configuration")
    replay.add_argument("file", type=Path)
    replay.add_argument("--out", type=Path, help="write here instead of overwriting the file")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "selfcheck":
        return RunConfig(command="selfcheck")
    shared = {
        "command": args.command,
        "points": args.points,
        "omega_probe": args.omega_probe,
        "length": args.length,
        "drag_mode": args.drag_mode,
        "format": args.format,
    }
    if args.command == "figure":
        return RunConfig(figure=args.name, **shared)

    fields = {
        **shared,
        "kappa": args.kappa,
        "omega_m": args.omega_m,
        "gamma_m": args.gamma_m,
        "beta": args.beta,
        "beta_ideal": args.beta_ideal,
        "unit_scale": args.unit_scale,
        "x_min": args.x_min,
        "x_max": args.x_max,
        "v": args.v,
    }
    if args.command == "drag":
        fields.update(
            sweep_over=args.sweep_over,
            detuning=args.detuning,
            v_min=args.v_min,
            v_max=args.v_max,
            v_points=args.v_points,
        )
    elif args.command == "sweep":
        fields.update(vary=args.vary, values=tuple(args.values), with_drag=args.with_drag)
    return RunConfig(**fields)


def _report_error(error: dict) -> None:
    sys.stderr.write(json.dumps(error) + "\n")


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except OptomechError as e:
        _report_error(e.to_dict())
        return e.exit_code
    level = logging.WARNING if args.quiet else logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=level)

    try:
        if args.command == "replay":
            config = RunConfig.model_validate(read_run_config(args.file))
            out = args.out or args.file
        else:
            config = config_from_args(args)
            out = getattr(args, "out", None)
        return execute(config, out)
    except ValidationError as e:
        fields = sorted({".".join(str(part) for part in err["loc"]) for err in e.errors()})
        _report_error({"error": "ValidationError", "message": str(e), "fields": fields})
        return 1
    except OptomechError as e:
        _report_error(e.to_dict())
        return e.exit_code
    except OSError as e:
        _report_error({"error": type(e).__name__, "message": str(e), "fields": []})
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
