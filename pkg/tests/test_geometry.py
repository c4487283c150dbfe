import itertools

import pytest

from errors.geometry import DegenerateGeometryError
from models.geometry import (
    Geometry,
    Path,
    PathPair,
)
from services.geometry import (
    basis_separations,
    separation,
    spin_separation,
    validate,
)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (Path.L, Path.L, 2.0),
        (Path.R, Path.R, 2.0),
        (Path.R, Path.L, 1.0),
        (Path.L, Path.R, 3.0),
    ],
)
def test_separation(geometry_21, a, b, expected):
    assert separation(geometry_21, PathPair(a=a, b=b)) == expected


def test_basis_order(geometry_21):
    assert basis_separations(geometry_21) == (2.0, 3.0, 1.0, 2.0)


def test_spin_labels_follow_paths(geometry_21):
    # r = 1 <-> L, r = 2 <-> R for both particles
    assert spin_separation(geometry_21, 0, 0) == 2.0
    assert spin_separation(geometry_21, 0, 1) == 3.0
    assert spin_separation(geometry_21, 1, 0) == 1.0
    assert spin_separation(geometry_21, 1, 1) == 2.0


@pytest.mark.parametrize("d, dx", [(2.0, 1.0), (1e-8, 5e-9), (7.0, 0.1)])
def test_extremes_and_symmetry(d, dx):
    g = Geometry(d=d, dx=dx)
    values = [separation(g, PathPair(a=a, b=b)) for a, b in itertools.product(Path, Path)]
    assert min(values) == pytest.approx(d - dx)
    assert max(values) == pytest.approx(d + dx)
    rl = separation(g, PathPair(a=Path.R, b=Path.L))
    lr = separation(g, PathPair(a=Path.L, b=Path.R))
    assert rl + lr == pytest.approx(2 * d)


def test_validate_ok(geometry_21):
    assert validate(geometry_21) is geometry_21


@pytest.mark.parametrize("d, dx", [(1.0, 1.0), (1.0, 2.0), (1.0, 0.0), (1.0, -0.5)])
def test_validate_rejects_degenerate(d, dx):
    with pytest.raises(DegenerateGeometryError):
        validate(Geometry(d=d, dx=dx))


def test_collapsed_superposition_allowed_on_request():
    g = Geometry(d=1.0, dx=0.0)
    assert validate(g, allow_collapsed=True) is g
    with pytest.raises(DegenerateGeometryError):
        validate(Geometry(d=1.0, dx=1.0), allow_collapsed=True)
