from typing import ClassVar

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    field_validator,
)

from errors.state import InvalidStateError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
POSITIVITY_TOL = -1e-10


def _as_density_matrix(value, dim: int) -> np.ndarray:
    m = np.array(value, dtype=np.complex128)
    if m.shape != (dim, dim):
        raise InvalidStateError(f"Expected a {dim}x{dim} matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise InvalidStateError("Density matrix has non-finite entries")
    if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise InvalidStateError("Density matrix is not Hermitian")
    if abs(np.trace(m) - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"Density matrix trace is {np.trace(m).real!r}, expected 1")
    if np.min(np.linalg.eigvalsh(m)) < POSITIVITY_TOL:
        raise InvalidStateError("Density matrix has a negative eigenvalue")
    m.setflags(write=False)
    return m


class _DensityMatrix(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    DIM: ClassVar[int]
    m: np.ndarray

    @field_validator("m", mode="before")
    @classmethod
    def _validate_matrix(cls, value):
        return _as_density_matrix(value, cls.DIM)

    def purity(self) -> float:
        return float(np.trace(self.m @ self.m).real)


class QubitState2(_DensityMatrix):
    """Single orbital qubit, basis {|L>, |R>}."""
    DIM: ClassVar[int] = 2


class PairState4(_DensityMatrix):
    """Two-qubit state rho_IJ, basis {LL, LR, RL, RR}, I = 2(i-1) + k."""
    DIM: ClassVar[int] = 4
