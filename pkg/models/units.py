from __future__ import annotations

import math
from enum import Enum

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
)

from errors.units import DimensionMismatchError


class UnitMode(str, Enum):
    SI = "SI"
    NATURAL = "Natural"


class Dimension(str, Enum):
    MASS = "Mass"
    LENGTH = "Length"
    TIME = "Time"
    MAGNETIC_FIELD = "MagneticField"
    FREQUENCY = "Frequency"
    DIMENSIONLESS = "Dimensionless"


class UnitSystem(BaseModel):
    """
    A unit system in which masses, lengths, times and fields are expressed.

    SI values are CODATA 2018. Natural units set hbar = c = 1 and measure every
    quantity in powers of the electronvolt.
    """
    model_config = ConfigDict(frozen=True)

    mode: UnitMode
    hbar: float = Field(gt=0, description="Reduced Planck constant (J s in SI, 1 in natural units)")
    c: float = Field(gt=0, description="Speed of light (m/s in SI, 1 in natural units)")
    G: float = Field(gt=0, description="Gravitational constant (m^3 kg^-1 s^-2 in SI, eV^-2 in natural units)")

    @computed_field
    @property
    def kappa_sq(self) -> float:
        return 16.0 * math.pi * self.G


class PhysicalQuantity(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    dimension: Dimension

    def _check_same_dimension(self, other: PhysicalQuantity) -> None:
        if self.dimension != other.dimension:
            raise DimensionMismatchError(
                f"Cannot combine {self.dimension.value} with {other.dimension.value}"
            )

    def __add__(self, other: PhysicalQuantity) -> PhysicalQuantity:
        if not isinstance(other, PhysicalQuantity):
            return NotImplemented
        self._check_same_dimension(other)
        return PhysicalQuantity(value=self.value + other.value, dimension=self.dimension)

    def __sub__(self, other: PhysicalQuantity) -> PhysicalQuantity:
        if not isinstance(other, PhysicalQuantity):
            return NotImplemented
        self._check_same_dimension(other)
        return PhysicalQuantity(value=self.value - other.value, dimension=self.dimension)

    def __mul__(self, factor: float) -> PhysicalQuantity:
        if isinstance(factor, PhysicalQuantity):
            raise DimensionMismatchError("Products of dimensioned quantities are not supported")
        return PhysicalQuantity(value=self.value * factor, dimension=self.dimension)

    __rmul__ = __mul__

    def __neg__(self) -> PhysicalQuantity:
        return PhysicalQuantity(value=-self.value, dimension=self.dimension)
