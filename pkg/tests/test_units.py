import math

import pytest

from errors.units import (
    DimensionMismatchError,
    UnsupportedDimensionError,
)
from models.units import (
    Dimension,
    PhysicalQuantity,
)
from services import units
from services.units import (
    C_SI,
    E_CHARGE,
    HBAR_SI,
    MU0_SI,
    convert,
    convert_value,
    coupling_prefactor,
    format_registry,
    natural_units,
    si_units,
    unit_registry,
)


def test_mass_si_to_si_is_identity():
    q = PhysicalQuantity(value=1.0, dimension=Dimension.MASS)
    assert convert(q, si_units(), si_units()) == q


@pytest.mark.parametrize("dimension", list(Dimension))
@pytest.mark.parametrize("value", [1e-35, 2.5, 7.3e12])
def test_round_trip_si_natural_si(dimension, value):
    nat = natural_units()
    there = convert_value(value, dimension, si_units(), nat)
    back = convert_value(there, dimension, nat, si_units())
    assert back == pytest.approx(value, rel=1e-12)


def test_kilogram_in_electronvolts():
    assert convert_value(1.0, Dimension.MASS, si_units(), natural_units()) == pytest.approx(C_SI**2 / E_CHARGE, rel=1e-15)
    assert convert_value(1.0, Dimension.MASS, si_units(), natural_units()) == pytest.approx(5.609588603804452e35, rel=1e-10)


def test_tesla_in_heaviside_lorentz_units():
    assert convert_value(1.0, Dimension.MAGNETIC_FIELD, si_units(), natural_units()) == pytest.approx(195.35, rel=1e-4)


def test_unsupported_dimension(monkeypatch):
    monkeypatch.delitem(units._SI_TO_NATURAL, Dimension.FREQUENCY)
    with pytest.raises(UnsupportedDimensionError):
        convert(PhysicalQuantity(value=1.0, dimension=Dimension.FREQUENCY), si_units(), natural_units())


def test_coupling_prefactor_is_G():
    assert coupling_prefactor(si_units()) == pytest.approx(6.67430e-11, rel=1e-15)
    assert coupling_prefactor(natural_units(G=1.0)) == pytest.approx(1.0, rel=1e-15)
    for u in (si_units(), natural_units(), natural_units(G=3.7)):
        assert coupling_prefactor(u) == pytest.approx(u.G, rel=1e-15)
        assert u.kappa_sq / (16 * math.pi) == pytest.approx(u.G, rel=1e-15)


def test_natural_G_in_inverse_eV_squared():
    assert natural_units().G == pytest.approx(6.70883e-57, rel=1e-4)


def test_mismatched_arithmetic_is_rejected(rng):
    for _ in range(100):
        mass = PhysicalQuantity(value=float(rng.normal()), dimension=Dimension.MASS)
        length = PhysicalQuantity(value=float(rng.normal()), dimension=Dimension.LENGTH)
        with pytest.raises(DimensionMismatchError):
            mass + length
        with pytest.raises(DimensionMismatchError):
            length - mass


def test_same_dimension_arithmetic():
    a = PhysicalQuantity(value=2.0, dimension=Dimension.TIME)
    b = PhysicalQuantity(value=0.5, dimension=Dimension.TIME)
    assert (a + b).value == 2.5
    assert (a - b).value == 1.5
    assert (3 * a).value == 6.0
    assert (-a).value == -2.0
    with pytest.raises(DimensionMismatchError):
        a * b


def test_registry_dump():
    text = format_registry(unit_registry())
    lines = dict(line.split("=", 1) for line in text.splitlines())
    assert lines["magnetic_convention"] == "heaviside-lorentz"
    assert lines["constants"] == "CODATA 2018"
    assert float(lines["G_si"]) == 6.67430e-11
    assert HBAR_SI == 1.054571817e-34
    assert MU0_SI == 1.25663706212e-6
