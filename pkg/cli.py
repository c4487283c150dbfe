import argparse
import logging
import sys
from pathlib import Path

from config import (
    KernelKind,
    settings,
)
from errors.entanglement import (
    EigenSolverError,
    NotHermitianError,
)
from errors.evolution import (
    IntegrationError,
    InvalidRateMatrixError,
    MissingMagneticFieldError,
    SignCalibrationError,
)
from errors.geometry import DegenerateGeometryError
from errors.spinor import (
    LorentzIndexError,
    SpinorAlgebraError,
)
from errors.state import InvalidStateError
from errors.sweep import (
    CrossoverNotFoundError,
    EmptySweepError,
    SweepConfigError,
    ThresholdNotFoundError,
)
from errors.units import (
    DimensionMismatchError,
    UnsupportedDimensionError,
)
from models.evolution import CouplingKind
from models.sweep import (
    IntegratorKind,
    PlotKind,
    SweepConfig,
)
from models.units import UnitMode
from services.evolution import (
    sign_convention,
    verify_sign_convention,
)
from services.plotting import write_svg
from services.presets import (
    load_config,
    preset_names,
)
from services.spinor import verify_algebra
from services.sweep import (
    entanglement_thresholds,
    find_crossover,
    rows_to_csv,
    run_sweep,
    scan_phase_sum,
    write_csv,
)
from services.units import (
    format_registry,
    unit_registry,
)

logger = logging.getLogger(__name__)

DOMAIN_ERRORS = (
    UnsupportedDimensionError,
    DimensionMismatchError,
    DegenerateGeometryError,
    LorentzIndexError,
    SpinorAlgebraError,
    InvalidStateError,
    MissingMagneticFieldError,
    InvalidRateMatrixError,
    SignCalibrationError,
    IntegrationError,
    NotHermitianError,
    EigenSolverError,
    SweepConfigError,
    CrossoverNotFoundError,
    ThresholdNotFoundError,
    EmptySweepError,
)

# argparse dest -> SweepConfig field
_FLAG_FIELDS = {
    "model": "models",
    "d": "d",
    "dx": "dx",
    "tau": "tau",
    "b3": "B3",
    "mass_min": "mass_min",
    "mass_max": "mass_max",
    "points": "points",
    "kernel": "kernel",
    "sigma0": "sigma0",
    "sigma0p": "sigma0p",
    "steps": "steps",
    "integrator": "integrator",
    "units": "units",
    "out": "out_csv",
    "svg": "out_svg",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gravqubit",
        description="Sweep gravitationally induced entanglement of two spatially superposed qubits over mass.",
    )
    parser.add_argument("--preset", choices=preset_names(), default=None, help=f"Parameter set (default {settings.DEFAULT_PRESET})")
    parser.add_argument("--config", default=None, help="INI-style key=value file; flags override it")
    parser.add_argument("--model", default=None, help="Comma-separated coupling models: I, II, static")
    parser.add_argument("--d", type=float, default=None, help="Center separation in m")
    parser.add_argument("--dx", type=float, default=None, help="Superposition size in m (default d/2)")
    parser.add_argument("--tau", type=float, default=None, help="Interaction time in s")
    parser.add_argument("--b3", type=float, default=None, help="Magnetic field in T")
    parser.add_argument("--mass-min", type=float, default=None, help="Smallest mass in kg")
    parser.add_argument("--mass-max", type=float, default=None, help="Largest mass in kg")
    parser.add_argument("--points", type=int, default=None, help="Number of masses")
    parser.add_argument("--kernel", choices=[k.value for k in KernelKind], default=None)
    parser.add_argument("--sigma0", type=float, default=None, help="Wave-packet width of particle A in m")
    parser.add_argument("--sigma0p", type=float, default=None, help="Wave-packet width of particle B in m")
    parser.add_argument("--steps", type=int, default=None, help="RK4 steps (rk4 integrator)")
    parser.add_argument("--integrator", choices=[i.value for i in IntegratorKind], default=None)
    parser.add_argument("--units", choices=[u.value for u in UnitMode], default=None, help="Unit system the evolution runs in")
    parser.add_argument("--out", default=None, help="CSV output path (stdout when omitted)")
    parser.add_argument("--svg", default=None, help="SVG output path")
    parser.add_argument("--plot", choices=[p.value for p in PlotKind], default=PlotKind.PHASE_VS_MASS.value)
    parser.add_argument("--scan", type=int, default=None, metavar="POINTS", help="Emit the phase-sum scan instead of a mass sweep")
    parser.add_argument("--report", action="store_true", help="Print crossover and entanglement thresholds to stderr")
    parser.add_argument("--print-units", action="store_true", help="Print constants and conventions and exit")
    parser.add_argument("--explain-signs", action="store_true", help="Print the F-tensor sign convention and exit")
    return parser


def _flags(args: argparse.Namespace) -> dict:
    return {field: getattr(args, dest) for dest, field in _FLAG_FIELDS.items()}


def _report(cfg: SweepConfig) -> None:
    if CouplingKind.MODEL_I in cfg.models and CouplingKind.MODEL_II in cfg.models:
        try:
            crossover = find_crossover(cfg)
            print(
                f"crossover_kg={crossover.mass_kg!r} crossover_eV={crossover.mass_natural_eV!r} "
                f"published_kg={crossover.published_mass_kg!r} ratio={crossover.ratio_to_published!r}",
                file=sys.stderr,
            )
        except CrossoverNotFoundError as e:
            logger.warning("No crossover: %s", e)
    for threshold in entanglement_thresholds(cfg):
        print(
            f"threshold_model={threshold.model.value} E_N={threshold.threshold!r} mass_kg={threshold.mass_kg!r} "
            f"published_kg={threshold.published_mass_kg!r} ratio={threshold.ratio_to_published!r}",
            file=sys.stderr,
        )


def _scan(points: int, args: argparse.Namespace) -> None:
    rows = scan_phase_sum(points)
    lines = ["phase_sum,log_negativity,reduced_coherence"]
    lines += [f"{r.phase_sum:.16e},{r.log_negativity:.16e},{r.reduced_coherence:.16e}" for r in rows]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    if args.svg:
        write_svg(rows, PlotKind.NEGATIVITY_VS_PHASE_SUM, args.svg)


def run(args: argparse.Namespace) -> int:
    if args.print_units:
        print(format_registry(unit_registry()))
        return 0
    if args.explain_signs:
        print(sign_convention().explain())
        return 0

    verify_algebra()
    verify_sign_convention()

    if args.scan is not None:
        _scan(args.scan, args)
        return 0

    cfg = load_config(args.preset, args.config, _flags(args))
    rows = run_sweep(cfg)
    if cfg.out_csv:
        write_csv(rows, cfg.out_csv)
    else:
        sys.stdout.write(rows_to_csv(rows))
    if cfg.out_svg:
        plot = PlotKind(args.plot)
        if plot == PlotKind.NEGATIVITY_VS_PHASE_SUM:
            write_svg(scan_phase_sum(), plot, cfg.out_svg)
        else:
            write_svg(rows, plot, cfg.out_svg)
    if args.report:
        _report(cfg)
    return 0


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except DOMAIN_ERRORS as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception:
        logger.exception("Unexpected failure")
        return 1


if __name__ == "__main__":
    sys.exit(main())
