import numpy as np
import pytest

from models.evolution import (
    CouplingKind,
    CouplingModel,
)
from models.geometry import Geometry
from services.units import natural_units


@pytest.fixture
def rng():
    return np.random.default_rng(20240521)


@pytest.fixture
def unit_natural():
    """Natural units with G = 1, so couplings read as plain m1 * m2."""
    return natural_units(G=1.0)


@pytest.fixture
def geometry_21():
    return Geometry(d=2.0, dx=1.0)


@pytest.fixture
def model_one_unit():
    return CouplingModel(kind=CouplingKind.MODEL_I, m1=1.0, m2=1.0)

