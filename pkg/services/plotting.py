import io
import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import numpy as np
from matplotlib.figure import Figure

from errors.sweep import EmptySweepError
from models.sweep import (
    PhaseScanRow,
    PlotKind,
    SweepRow,
)

logger = logging.getLogger(__name__)

# Fixed salt and no timestamp keep the SVG byte-identical between runs.
_SVG_RC = {"svg.hashsalt": "gravqubit", "svg.fonttype": "path"}

_AXIS_LABELS: dict[PlotKind, tuple[str, str]] = {
    PlotKind.PHASE_VS_MASS: ("mass m [kg]", "|dphi_LR + dphi_RL| [rad]"),
    PlotKind.NEGATIVITY_VS_MASS: ("mass m [kg]", "log negativity E_N [bits]"),
    PlotKind.NEGATIVITY_VS_PHASE_SUM: ("phase sum dphi_LR + dphi_RL [rad]", "log negativity E_N [bits]"),
}


def _mass_series(rows: list[SweepRow], which: PlotKind) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    series: dict[str, tuple[list[float], list[float]]] = {}
    for row in rows:
        y = row.phase_sum if which == PlotKind.PHASE_VS_MASS else row.log_negativity
        xs, ys = series.setdefault(row.model.value, ([], []))
        xs.append(row.mass_kg)
        ys.append(y)
    return {name: (np.array(xs), np.array(ys)) for name, (xs, ys) in series.items()}


def emit_svg(rows: list[SweepRow] | list[PhaseScanRow], which: PlotKind) -> str:
    """
    Render one figure as a self-contained SVG document.

    Mass plots put mass on a log axis (and |phase sum| on a log axis too);
    the phase-sum plot is linear. Each curve is a group with id "curve-<model>".

    Raises:
        EmptySweepError: If fewer than two rows are given, or a phase plot
            has no nonzero phase sum to draw.
    """
    if len(rows) < 2:
        raise EmptySweepError(f"Need at least 2 rows to plot {which.value}, got {len(rows)}")

    with matplotlib.rc_context(_SVG_RC):
        fig = Figure(figsize=(6.4, 4.8))
        ax = fig.add_subplot()

        if which == PlotKind.NEGATIVITY_VS_PHASE_SUM:
            x = np.array([row.phase_sum for row in rows])
            y = np.array([row.log_negativity for row in rows])
            ax.plot(x, y, gid="curve-scan", label="closed form")
        else:
            plotted = 0
            for name, (x, y) in _mass_series(rows, which).items():
                if which == PlotKind.PHASE_VS_MASS:
                    # smeared kernels can flip the sign; zeros (static limit) cannot go on a log axis
                    y = np.abs(y)
                    keep = y > 0
                    x, y = x[keep], y[keep]
                    if len(x) == 0:
                        logger.info("Model %s has no nonzero phase sum; left out of %s", name, which.value)
                        continue
                ax.plot(x, y, gid=f"curve-{name}", label=f"Model {name}")
                plotted += 1
            if plotted == 0:
                raise EmptySweepError(f"No nonzero phase sum to plot {which.value}")
            ax.set_xscale("log")
            if which == PlotKind.PHASE_VS_MASS:
                ax.set_yscale("log")

        xlabel, ylabel = _AXIS_LABELS[which]
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        ax.legend()
        fig.tight_layout()

        buffer = io.BytesIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue().decode("utf-8")


def write_svg(rows: list[SweepRow] | list[PhaseScanRow], which: PlotKind, path: str | Path) -> None:
    Path(path).write_text(emit_svg(rows, which), encoding="utf-8")
    logger.info("Wrote %s plot to %s", which.value, path)
