import math
from enum import Enum

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_validator,
    model_validator,
)

from errors.evolution import InvalidRateMatrixError


class CouplingKind(str, Enum):
    MODEL_I = "I"
    MODEL_II = "II"
    STATIC = "static"


class CouplingModel(BaseModel):
    """
    Microscopic graviton coupling. Masses and B3 are expressed in the unit
    system the model is evaluated with (kg and T in SI, eV and eV^2 in natural units).
    """
    model_config = ConfigDict(frozen=True)

    kind: CouplingKind
    m1: float = Field(gt=0)
    m2: float = Field(gt=0)
    B3: float | None = Field(default=None, ge=0, description="Magnetic field along z (Model II only)")

    def larmor(self) -> tuple[float, float]:
        """omega0^(i) = B3 / m_i, meaningful in natural units."""
        b3 = self.B3 or 0.0
        return b3 / self.m1, b3 / self.m2


class WavePacketWidths(BaseModel):
    model_config = ConfigDict(frozen=True)

    sigma0: float = Field(default=0.0, ge=0)
    sigma0p: float = Field(default=0.0, ge=0)

    @computed_field
    @property
    def sigma_eff(self) -> float:
        return math.sqrt(2.0 * (self.sigma0**2 + self.sigma0p**2))


class PhasePair(BaseModel):
    """Accumulated phases relative to the common phase phi of |LL> and |RR>."""
    model_config = ConfigDict(frozen=True)

    dphi_LR: float
    dphi_RL: float
    phi_common: float = 0.0
    phase_sum: float = Field(description="dphi_LR + dphi_RL, filled in when omitted")

    @model_validator(mode="before")
    @classmethod
    def _fill_phase_sum(cls, data):
        if isinstance(data, dict) and data.get("phase_sum") is None:
            if "dphi_LR" in data and "dphi_RL" in data:
                data = {**data, "phase_sum": float(data["dphi_LR"]) + float(data["dphi_RL"])}
        return data

    def wrapped(self) -> "PhasePair":
        """
        Reduce both phases into [0, 2 pi) while keeping their sum congruent to
        phase_sum, so states built from huge phases keep the right entanglement.
        """
        two_pi = 2.0 * math.pi
        lr = math.fmod(self.dphi_LR, two_pi) % two_pi
        total = math.fmod(self.phase_sum, two_pi) % two_pi
        rl = (total - lr) % two_pi
        return PhasePair(
            dphi_LR=lr,
            dphi_RL=rl,
            phi_common=math.fmod(self.phi_common, two_pi),
            phase_sum=self.phase_sum,
        )


class RateMatrix(BaseModel):
    """Entrywise rates: d rho_IJ / dt = rates_IJ * rho_IJ."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rates: np.ndarray

    @field_validator("rates", mode="before")
    @classmethod
    def _validate_rates(cls, value):
        rates = np.array(value, dtype=np.complex128)
        if rates.shape != (4, 4):
            raise InvalidRateMatrixError(f"Rate matrix must be 4x4, got {rates.shape}")
        scale = max(1.0, float(np.max(np.abs(rates))))
        if np.max(np.abs(np.diag(rates))) > 1e-14 * scale:
            raise InvalidRateMatrixError("Diagonal rates must vanish")
        # rho_JI = conj(rho_IJ) is preserved only if rates_JI = conj(rates_IJ)
        if np.max(np.abs(rates - rates.conj().T)) > 1e-12 * scale:
            raise InvalidRateMatrixError("Rates must satisfy rates_JI = conj(rates_IJ)")
        if abs(rates[0, 3]) > 1e-12 * scale or abs(rates[3, 0]) > 1e-12 * scale:
            raise InvalidRateMatrixError("The LL/RR coherence must not rotate")
        rates.setflags(write=False)
        return rates

    @classmethod
    def zero(cls) -> "RateMatrix":
        return cls(rates=np.zeros((4, 4)))

    def max_rate(self) -> float:
        return float(np.max(np.abs(self.rates)))
