"""
Physical constants and SI <-> natural-unit conversions.

Natural units: hbar = c = 1, energies in eV. Magnetic fields use the
Heaviside-Lorentz convention, B[eV^2] = B[T] * sqrt((hbar c)^3 / mu0) / e^2.
"""
import logging
import math

from config import settings
from errors.units import UnsupportedDimensionError
from models.units import (
    Dimension,
    PhysicalQuantity,
    UnitMode,
    UnitSystem,
)

logger = logging.getLogger(__name__)


CONSTANTS_SOURCE = "CODATA 2018"

# Pinned so SI results do not move with the installed scipy's CODATA release.
# name -> (value, unit), keys as in scipy.constants.physical_constants
CODATA_2018: dict[str, tuple[float, str]] = {
    "Newtonian constant of gravitation": (6.67430e-11, "m^3 kg^-1 s^-2"),
    "reduced Planck constant": (1.054571817e-34, "J s"),
    "speed of light in vacuum": (299792458.0, "m s^-1"),
    "elementary charge": (1.602176634e-19, "C"),
    "vacuum mag. permeability": (1.25663706212e-6, "N A^-2"),
}

G_SI = CODATA_2018["Newtonian constant of gravitation"][0]
HBAR_SI = CODATA_2018["reduced Planck constant"][0]
C_SI = CODATA_2018["speed of light in vacuum"][0]
E_CHARGE = CODATA_2018["elementary charge"][0]
MU0_SI = CODATA_2018["vacuum mag. permeability"][0]

MAGNETIC_CONVENTION = "heaviside-lorentz"


def si_units() -> UnitSystem:
    return UnitSystem(mode=UnitMode.SI, hbar=HBAR_SI, c=C_SI, G=G_SI)


def natural_units(G: float | None = None) -> UnitSystem:
    """
    Natural units (hbar = c = 1, eV). G defaults to the SI value converted to eV^-2;
    pass G explicitly to work in a normalized system (e.g. G = 1).
    """
    if G is None:
        G = G_SI * E_CHARGE**2 / (HBAR_SI * C_SI**5)
    return UnitSystem(mode=UnitMode.NATURAL, hbar=1.0, c=1.0, G=G)


def units_for(mode: UnitMode) -> UnitSystem:
    return si_units() if mode == UnitMode.SI else natural_units()


# Multiply an SI value by these to obtain the natural-unit value.
_SI_TO_NATURAL: dict[Dimension, float] = {
    Dimension.MASS: C_SI**2 / E_CHARGE,
    Dimension.LENGTH: E_CHARGE / (HBAR_SI * C_SI),
    Dimension.TIME: E_CHARGE / HBAR_SI,
    Dimension.FREQUENCY: HBAR_SI / E_CHARGE,
    Dimension.MAGNETIC_FIELD: math.sqrt((HBAR_SI * C_SI) ** 3 / MU0_SI) / E_CHARGE**2,
    Dimension.DIMENSIONLESS: 1.0,
}


def convert(q: PhysicalQuantity, source: UnitSystem, target: UnitSystem) -> PhysicalQuantity:
    """
    Rescale a quantity from one unit system to another.

    Raises:
        UnsupportedDimensionError: If the quantity's dimension has no conversion rule.
    """
    try:
        factor = _SI_TO_NATURAL[q.dimension]
    except KeyError:
        raise UnsupportedDimensionError(f"No conversion rule for dimension {q.dimension!r}")

    if source.mode == target.mode:
        return q
    if source.mode == UnitMode.SI:
        return PhysicalQuantity(value=q.value * factor, dimension=q.dimension)
    return PhysicalQuantity(value=q.value / factor, dimension=q.dimension)


def convert_value(value: float, dimension: Dimension, source: UnitSystem, target: UnitSystem) -> float:
    return convert(PhysicalQuantity(value=value, dimension=dimension), source, target).value


def coupling_prefactor(u: UnitSystem) -> float:
    """kappa^2 / (16 pi), the prefactor of the forward-scattering rate; equals G."""
    return u.kappa_sq / (16.0 * math.pi)


def natural_coupling(g: float, u: UnitSystem) -> float:
    """Express a coupling strength (units of G * mass^2) as the dimensionless g / (hbar c)."""
    if u.mode == UnitMode.NATURAL:
        return g
    return g / (u.hbar * u.c)


def unit_registry() -> dict[str, str]:
    """Constants and conventions, as printed by ``--print-units``."""
    si = si_units()
    nat = natural_units()
    registry = {
        "constants": CONSTANTS_SOURCE,
        "natural_base": "eV (hbar=c=1)",
        "magnetic_convention": MAGNETIC_CONVENTION,
        "G_si": repr(si.G),
        "hbar_si": repr(si.hbar),
        "c_si": repr(si.c),
        "e_si": repr(E_CHARGE),
        "mu0_si": repr(MU0_SI),
        "kappa_sq_si": repr(si.kappa_sq),
        "G_natural_eV-2": repr(nat.G),
        "kappa_sq_natural_eV-2": repr(nat.kappa_sq),
        "kg_in_eV": repr(_SI_TO_NATURAL[Dimension.MASS]),
        "m_in_eV-1": repr(_SI_TO_NATURAL[Dimension.LENGTH]),
        "s_in_eV-1": repr(_SI_TO_NATURAL[Dimension.TIME]),
        "rad_per_s_in_eV": repr(_SI_TO_NATURAL[Dimension.FREQUENCY]),
        "T_in_eV2": repr(_SI_TO_NATURAL[Dimension.MAGNETIC_FIELD]),
        "published_crossover_kg": repr(settings.PUBLISHED_CROSSOVER_KG),
    }
    return registry


def format_registry(registry: dict[str, str]) -> str:
    return "\n".join(f"{key}={value}" for key, value in registry.items())
