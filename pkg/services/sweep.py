"""
Mass sweeps over the two coupling models, the Model I / Model II crossover,
entanglement thresholds and the phase-sum scan behind the negativity curve.
"""
import csv
import io
import logging
import math
from abc import (
    ABC,
    abstractmethod,
)
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np
from scipy import optimize

from config import (
    KernelKind,
    settings,
)
from errors.sweep import (
    CrossoverNotFoundError,
    ThresholdNotFoundError,
)
from models.evolution import (
    CouplingKind,
    CouplingModel,
    PhasePair,
    WavePacketWidths,
)
from models.geometry import Geometry
from models.sweep import (
    CrossoverReport,
    IntegratorKind,
    PhaseScanRow,
    SweepConfig,
    SweepRow,
    ThresholdReport,
)
from models.units import (
    Dimension,
    UnitSystem,
)
from services.entanglement import (
    log_negativity,
    reduced_coherence,
)
from services.evolution import (
    ClosedFormEvolver,
    Evolver,
    RateEquationEvolver,
    closed_form_state,
    coupling_strength,
)
from services.kernel import (
    Kernel,
    point_kernel,
    wavepacket_kernel,
)
from services.state import initial_pair_state
from services.units import (
    convert_value,
    natural_coupling,
    natural_units,
    si_units,
    units_for,
)

logger = logging.getLogger(__name__)

CSV_COLUMNS = (
    "model",
    "mass_kg",
    "coupling_natural",
    "dphi_LR",
    "dphi_RL",
    "phase_sum",
    "log_negativity",
    "kernel",
    "d_m",
    "dx_m",
    "tau_s",
    "B3_T",
)

CROSSOVER_XTOL = 1e-13


def _si(value: float, dimension: Dimension, u: UnitSystem) -> float:
    return convert_value(value, dimension, si_units(), u)


def geometry_for(cfg: SweepConfig, u: UnitSystem) -> Geometry:
    return Geometry(d=_si(cfg.d, Dimension.LENGTH, u), dx=_si(cfg.dx, Dimension.LENGTH, u))


def kernel_for(cfg: SweepConfig, u: UnitSystem) -> Kernel:
    if cfg.kernel == KernelKind.POINT:
        return point_kernel
    return wavepacket_kernel(
        WavePacketWidths(
            sigma0=_si(cfg.sigma0, Dimension.LENGTH, u),
            sigma0p=_si(cfg.sigma0p, Dimension.LENGTH, u),
        )
    )


def evolver_for(cfg: SweepConfig, u: UnitSystem) -> Evolver:
    kernel = kernel_for(cfg, u)
    if cfg.integrator == IntegratorKind.RK4:
        return RateEquationEvolver(u, kernel, steps=cfg.steps)
    return ClosedFormEvolver(u, kernel)


def coupling_for(cfg: SweepConfig, kind: CouplingKind, mass_kg: float, u: UnitSystem) -> CouplingModel:
    m = _si(mass_kg, Dimension.MASS, u)
    b3 = _si(cfg.B3, Dimension.MAGNETIC_FIELD, u) if kind == CouplingKind.MODEL_II else None
    return CouplingModel(kind=kind, m1=m, m2=m, B3=b3)


def mass_grid(cfg: SweepConfig) -> np.ndarray:
    if cfg.log_grid:
        return np.geomspace(cfg.mass_min, cfg.mass_max, cfg.points)
    return np.linspace(cfg.mass_min, cfg.mass_max, cfg.points)


def sweep_point(cfg: SweepConfig, kind: CouplingKind, mass_kg: float) -> SweepRow:
    u = units_for(cfg.units)
    geometry = geometry_for(cfg, u)
    tau = _si(cfg.tau, Dimension.TIME, u)
    coupling = coupling_for(cfg, kind, mass_kg, u)
    evolver = evolver_for(cfg, u)

    phases = evolver.phases(coupling, geometry, tau)
    state = evolver.evolve(initial_pair_state(), coupling, geometry, tau)
    logger.debug("model=%s mass=%.3e phase_sum=%.6e", kind.value, mass_kg, phases.phase_sum)

    return SweepRow(
        model=kind,
        mass_kg=mass_kg,
        coupling_natural=natural_coupling(coupling_strength(coupling, u), u),
        dphi_LR=phases.dphi_LR,
        dphi_RL=phases.dphi_RL,
        phase_sum=phases.phase_sum,
        log_negativity=log_negativity(state),
        kernel=cfg.kernel,
        d_m=cfg.d,
        dx_m=cfg.dx,
        tau_s=cfg.tau,
        B3_T=cfg.B3,
    )


class SweepService(ABC):
    @abstractmethod
    def run(self, cfg: SweepConfig) -> list[SweepRow]:
        pass


class GridSweepService(SweepService):
    def __init__(self, workers: int = settings.SWEEP_WORKERS):
        self._workers = max(1, workers)

    def run(self, cfg: SweepConfig) -> list[SweepRow]:
        """
        Evaluate every (model, mass) point of the grid.

        Returns:
            Rows sorted by mass, then by the order of cfg.models; identical for
            any worker count.
        """
        tasks = [(kind, float(mass)) for mass in mass_grid(cfg) for kind in cfg.models]
        logger.info(
            "Sweeping %d points (%s) over [%.3e, %.3e] kg with %d worker(s)",
            len(tasks),
            ",".join(kind.value for kind in cfg.models),
            cfg.mass_min,
            cfg.mass_max,
            self._workers,
        )
        if self._workers == 1:
            rows = [sweep_point(cfg, kind, mass) for kind, mass in tasks]
        else:
            with ThreadPoolExecutor(max_workers=self._workers) as pool:
                rows = list(pool.map(lambda task: sweep_point(cfg, *task), tasks))

        order = {kind: index for index, kind in enumerate(cfg.models)}
        rows.sort(key=lambda row: (row.mass_kg, order[row.model]))
        logger.info("Sweep finished: %d rows", len(rows))
        return rows


def run_sweep(cfg: SweepConfig, workers: int = settings.SWEEP_WORKERS) -> list[SweepRow]:
    return GridSweepService(workers).run(cfg)


def _format(value) -> str:
    if isinstance(value, float):
        return "%.*e" % (settings.CSV_SIGNIFICANT_DIGITS - 1, value)
    if hasattr(value, "value"):
        return str(value.value)
    return str(value)


def rows_to_csv(rows: list[SweepRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_format(getattr(row, column)) for column in CSV_COLUMNS])
    return buffer.getvalue()


def write_csv(rows: list[SweepRow], path: str | Path) -> None:
    Path(path).write_text(rows_to_csv(rows), encoding="utf-8")
    logger.info("Wrote %d rows to %s", len(rows), path)


def _log_coupling_ratio(u: UnitSystem, mass: float, B3: float) -> float:
    g_one = coupling_strength(CouplingModel(kind=CouplingKind.MODEL_I, m1=mass, m2=mass), u)
    g_two = coupling_strength(CouplingModel(kind=CouplingKind.MODEL_II, m1=mass, m2=mass, B3=B3), u)
    return math.log(g_one) - math.log(g_two)


def crossover_mass(u: UnitSystem, B3: float, mass_min: float, mass_max: float) -> float:
    """
    Mass where the Model I and Model II couplings agree, by bracketed root
    search on log-mass. B3 and the mass range are in the units of u, and so is
    the result; in natural units it is sqrt(B3 / 2) for any G.

    Raises:
        CrossoverNotFoundError: If B3 is 0 or the couplings do not cross in the range.
    """
    if B3 == 0:
        raise CrossoverNotFoundError("Model II coupling vanishes for B3 = 0; there is no crossover")

    lo, hi = math.log(mass_min), math.log(mass_max)

    def f(log_mass: float) -> float:
        return _log_coupling_ratio(u, math.exp(log_mass), B3)

    if f(lo) * f(hi) > 0:
        raise CrossoverNotFoundError(
            f"Couplings do not cross in [{mass_min:.3e}, {mass_max:.3e}] ({u.mode.value} units)"
        )
    return math.exp(optimize.brentq(f, lo, hi, xtol=CROSSOVER_XTOL))


def find_crossover(cfg: SweepConfig) -> CrossoverReport:
    """
    Crossover mass m* for the configured field and mass range, evaluated in
    cfg.units. The kg value is reported next to the published 1e-27 kg
    together with their ratio.

    Raises:
        CrossoverNotFoundError: If B3 is 0 or the couplings do not cross in the range.
    """
    u = units_for(cfg.units)
    b3 = _si(cfg.B3, Dimension.MAGNETIC_FIELD, u)
    mass = crossover_mass(
        u,
        b3,
        _si(cfg.mass_min, Dimension.MASS, u),
        _si(cfg.mass_max, Dimension.MASS, u),
    )
    mass_kg = convert_value(mass, Dimension.MASS, u, si_units())

    nat = natural_units()
    report = CrossoverReport(
        mass_kg=mass_kg,
        mass_natural_eV=convert_value(mass_kg, Dimension.MASS, si_units(), nat),
        B3_T=cfg.B3,
        B3_natural_eV2=convert_value(cfg.B3, Dimension.MAGNETIC_FIELD, si_units(), nat),
        coupling_ratio=math.exp(_log_coupling_ratio(u, mass, b3)),
        ratio_to_published=mass_kg / settings.PUBLISHED_CROSSOVER_KG,
    )
    logger.info(
        "Crossover at %.6e kg (%.6e eV); published %.1e kg, ratio %.3e",
        report.mass_kg,
        report.mass_natural_eV,
        report.published_mass_kg,
        report.ratio_to_published,
    )
    return report


def threshold_phase_sum(threshold: float) -> float:
    """Smallest phase sum s with log2(1 + |sin(s/2)|) = threshold."""
    return 2.0 * math.asin(2.0**threshold - 1.0)


_PUBLISHED_THRESHOLDS = {
    CouplingKind.MODEL_I: settings.PUBLISHED_THRESHOLD_MODEL_I_KG,
    CouplingKind.MODEL_II: settings.PUBLISHED_THRESHOLD_MODEL_II_KG,
}


def entanglement_threshold(
    cfg: SweepConfig,
    kind: CouplingKind,
    threshold: float = settings.NEGATIVITY_THRESHOLD,
) -> ThresholdReport:
    """
    Mass at which the log negativity of one model first reaches `threshold`.

    Raises:
        ThresholdNotFoundError: If the model never reaches the threshold
            between THRESHOLD_SEARCH_MIN_KG and THRESHOLD_SEARCH_MAX_KG.
    """
    if kind == CouplingKind.STATIC:
        raise ThresholdNotFoundError("The static limit never entangles")

    u = units_for(cfg.units)
    geometry = geometry_for(cfg, u)
    tau = _si(cfg.tau, Dimension.TIME, u)
    evolver = evolver_for(cfg, u)
    target = threshold_phase_sum(threshold)

    def f(log_mass: float) -> float:
        phases = evolver.phases(coupling_for(cfg, kind, math.exp(log_mass), u), geometry, tau)
        # E_N depends on |sin(s/2)|; smeared kernels can make s negative
        magnitude = abs(phases.phase_sum)
        if magnitude == 0:
            raise ThresholdNotFoundError(f"Model {kind.value} accumulates no phase sum")
        return math.log(magnitude) - math.log(target)

    lo = math.log(settings.THRESHOLD_SEARCH_MIN_KG)
    hi = math.log(settings.THRESHOLD_SEARCH_MAX_KG)
    if f(lo) * f(hi) > 0:
        raise ThresholdNotFoundError(
            f"Model {kind.value} does not reach E_N = {threshold} between "
            f"{settings.THRESHOLD_SEARCH_MIN_KG:.1e} and {settings.THRESHOLD_SEARCH_MAX_KG:.1e} kg"
        )
    mass_kg = math.exp(optimize.brentq(f, lo, hi, xtol=CROSSOVER_XTOL))
    published = _PUBLISHED_THRESHOLDS[kind]
    logger.info("Model %s reaches E_N=%g at %.6e kg (published %.1e kg)", kind.value, threshold, mass_kg, published)
    return ThresholdReport(
        model=kind,
        threshold=threshold,
        mass_kg=mass_kg,
        published_mass_kg=published,
        ratio_to_published=mass_kg / published,
    )


def entanglement_thresholds(cfg: SweepConfig) -> list[ThresholdReport]:
    return [
        entanglement_threshold(cfg, kind)
        for kind in cfg.models
        if kind != CouplingKind.STATIC
    ]


def scan_phase_sum(points: int = 1001) -> list[PhaseScanRow]:
    """Closed-form states over phase_sum in [0, 2 pi]."""
    rows = []
    for phase_sum in np.linspace(0.0, 2.0 * math.pi, points):
        state = closed_form_state(PhasePair(dphi_LR=0.0, dphi_RL=float(phase_sum)))
        rows.append(
            PhaseScanRow(
                phase_sum=float(phase_sum),
                log_negativity=log_negativity(state),
                reduced_coherence=reduced_coherence(state),
            )
        )
    return rows
