from enum import Enum

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    model_validator,
)

from config import (
    KernelKind,
    settings,
)
from models.evolution import CouplingKind
from models.units import UnitMode


class IntegratorKind(str, Enum):
    CLOSED_FORM = "closed-form"
    RK4 = "rk4"


class PlotKind(str, Enum):
    PHASE_VS_MASS = "PhaseVsMass"
    NEGATIVITY_VS_MASS = "NegativityVsMass"
    NEGATIVITY_VS_PHASE_SUM = "NegativityVsPhaseSum"


class SweepConfig(BaseModel):
    """
    One mass sweep. Physical inputs are always SI (m, s, T, kg); `units` picks
    the system the evolution is evaluated in.
    """
    model_config = ConfigDict(frozen=True)

    models: list[CouplingKind] = Field(default=[CouplingKind.MODEL_I, CouplingKind.MODEL_II], min_length=1)
    d: float = Field(gt=0, description="Center separation in m")
    dx: float = Field(ge=0, description="Superposition size in m")
    tau: float = Field(ge=0, description="Interaction time in s")
    B3: float = Field(default=1.0, ge=0, description="Magnetic field in T (Model II)")
    sigma0: float = Field(default=0.0, ge=0, description="Wave-packet width of particle A in m")
    sigma0p: float = Field(default=0.0, ge=0, description="Wave-packet width of particle B in m")
    mass_min: float = Field(default=1e-40, gt=0, description="Smallest mass in kg")
    mass_max: float = Field(default=1e-15, gt=0, description="Largest mass in kg")
    points: int = 200
    log_grid: bool = True
    kernel: KernelKind = settings.DEFAULT_KERNEL
    integrator: IntegratorKind = IntegratorKind.CLOSED_FORM
    steps: int = Field(default=settings.RK4_STEPS, ge=1)
    units: UnitMode = UnitMode.SI
    out_csv: str | None = None
    out_svg: str | None = None
    preset: str | None = None

    @model_validator(mode="after")
    def _check_ranges(self):
        if not self.mass_min < self.mass_max:
            raise ValueError(f"mass_min ({self.mass_min}) must be below mass_max ({self.mass_max})")
        if self.points < 2:
            raise ValueError(f"points must be at least 2, got {self.points}")
        if not self.dx < self.d:
            raise ValueError(f"dx ({self.dx}) must be smaller than d ({self.d})")
        return self


class SweepRow(BaseModel):
    """One CSV row: a (model, mass) point of the sweep."""
    model: CouplingKind
    mass_kg: float
    coupling_natural: float = Field(description="g / (hbar c), dimensionless")
    dphi_LR: float
    dphi_RL: float
    phase_sum: float
    log_negativity: float
    kernel: KernelKind
    d_m: float
    dx_m: float
    tau_s: float
    B3_T: float


class PhaseScanRow(BaseModel):
    phase_sum: float
    log_negativity: float
    reduced_coherence: float


class CrossoverReport(BaseModel):
    mass_kg: float
    mass_natural_eV: float
    B3_T: float
    B3_natural_eV2: float
    coupling_ratio: float = Field(description="coupling_I / coupling_II at the crossover")
    published_mass_kg: float = settings.PUBLISHED_CROSSOVER_KG
    ratio_to_published: float


class ThresholdReport(BaseModel):
    """Mass at which the log negativity reaches `threshold` for one model."""
    model: CouplingKind
    threshold: float
    mass_kg: float
    published_mass_kg: float
    ratio_to_published: float
