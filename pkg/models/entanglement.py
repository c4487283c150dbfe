import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    field_validator,
)


class Spectrum4(BaseModel):
    """Eigen-decomposition M = Q diag(eigenvalues) Q^H of a 4x4 Hermitian matrix."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    eigenvalues: tuple[float, float, float, float] = Field(description="Real eigenvalues, descending")
    eigenvectors: np.ndarray = Field(description="Orthonormal eigenvectors as columns, matching eigenvalues")
    sweeps: int = Field(default=0, description="Jacobi sweeps used")

    @field_validator("eigenvectors", mode="before")
    @classmethod
    def _freeze(cls, value):
        q = np.array(value, dtype=np.complex128)
        q.setflags(write=False)
        return q

    def reconstruct(self) -> np.ndarray:
        q = self.eigenvectors
        return q @ np.diag(self.eigenvalues) @ q.conj().T


class EntanglementReport(BaseModel):
    log_negativity: float = Field(description="E_N = log2 of the trace norm of the partial transpose, in bits")
    reduced_coherence: float = Field(description="2 |(Tr_B rho)_12|")
    trace_norm: float
