from errors.geometry import DegenerateGeometryError
from models.geometry import (
    Geometry,
    Path,
    PathPair,
)

# Basis order of the pair state: |LL>, |LR>, |RL>, |RR> (particle A first).
BASIS: tuple[PathPair, ...] = (
    PathPair(a=Path.L, b=Path.L),
    PathPair(a=Path.L, b=Path.R),
    PathPair(a=Path.R, b=Path.L),
    PathPair(a=Path.R, b=Path.R),
)

# Spin index r = 1 (array index 0) travels path L, r = 2 travels path R.
SPIN_PATHS: tuple[Path, Path] = (Path.L, Path.R)


def validate(g: Geometry, allow_collapsed: bool = False) -> Geometry:
    """
    Check that the closest approach d - dx is strictly positive.

    Args:
        g: The geometry to check.
        allow_collapsed: Accept dx == 0 (no superposition, zero entangling phase).

    Raises:
        DegenerateGeometryError: If d <= dx, or dx <= 0 (dx < 0 when allow_collapsed).

    Returns:
        The same geometry.
    """
    if g.dx < 0 or (g.dx == 0 and not allow_collapsed):
        raise DegenerateGeometryError(f"Superposition size must be positive, got dx={g.dx}")
    if g.d <= g.dx:
        raise DegenerateGeometryError(
            f"Closest approach d - dx must be positive, got d={g.d}, dx={g.dx}"
        )
    return g


def separation(g: Geometry, p: PathPair) -> float:
    return abs(g.position_a(p.a) - g.position_b(p.b))


def basis_separations(g: Geometry) -> tuple[float, float, float, float]:
    """Separations for |LL>, |LR>, |RL>, |RR> = (d, d + dx, d - dx, d)."""
    return tuple(separation(g, pair) for pair in BASIS)


def spin_separation(g: Geometry, r: int, s: int) -> float:
    """R_sr: distance between particle A with spin r and particle B with spin s (0-based)."""
    return separation(g, PathPair(a=SPIN_PATHS[r], b=SPIN_PATHS[s]))
