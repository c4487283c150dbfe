from enum import Enum

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)


class Path(str, Enum):
    L = "L"
    R = "R"


class PathPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    a: Path = Field(description="Path of particle A")
    b: Path = Field(description="Path of particle B")


class Geometry(BaseModel):
    """
    Two collinear superpositions: A at {L: 0, R: dx}, B at {L: d, R: d + dx}.
    Lengths are in the units of whatever UnitSystem they are used with.
    """
    model_config = ConfigDict(frozen=True)

    d: float = Field(description="Center-to-center separation of the two superpositions")
    dx: float = Field(description="Separation of |L> and |R> within one superposition")

    def position_a(self, path: Path) -> float:
        return 0.0 if path == Path.L else self.dx

    def position_b(self, path: Path) -> float:
        return self.d if path == Path.L else self.d + self.dx
