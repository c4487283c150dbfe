from enum import Enum

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
)


class PropagatorComponent(str, Enum):
    """Index choice (mu nu, mu' nu') of the de Donder graviton propagator."""
    STATIC_0000 = "Static0000"
    TRANSVERSE_0303 = "Transverse0303"

    @property
    def indices(self) -> tuple[int, int, int, int]:
        if self is PropagatorComponent.STATIC_0000:
            return (0, 0, 0, 0)
        return (0, 3, 0, 3)


class SignConvention(BaseModel):
    """How the F-tensor turns spinor bilinears into phase rates."""
    model_config = ConfigDict(frozen=True)

    bilinear_diagonal: tuple[float, float] = Field(
        description="u_bar_r (I x sigma3) u_r for r = 1, 2"
    )
    spin_label_weight: str = Field(
        description="Weight multiplying each (r, s) term of the spin sum"
    )
    orientation: int = Field(description="Overall sign of F: +1 gain - loss, -1 loss - gain")
    rate_prefactor: str
    propagator_factors: dict[str, float]

    def explain(self) -> str:
        lines = [
            f"bilinear_diagonal={self.bilinear_diagonal[0]:+g},{self.bilinear_diagonal[1]:+g}",
            f"spin_label_weight={self.spin_label_weight}",
            f"orientation={self.orientation:+d} ({'gain - loss' if self.orientation > 0 else 'loss - gain'})",
            f"rate={self.rate_prefactor}",
        ]
        lines.extend(
            f"propagator_factor[{name}]={value:+g}" for name, value in self.propagator_factors.items()
        )
        return "\n".join(lines)
