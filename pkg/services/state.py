import numpy as np

from errors.state import InvalidStateError
from models.state import (
    PairState4,
    QubitState2,
)


def fold(i: int, k: int) -> int:
    """Pair index of (A index i, B index k), all 0-based: I = 2 i + k."""
    return 2 * i + k


def unfold(index: int) -> tuple[int, int]:
    return divmod(index, 2)


def tensor(a: QubitState2, b: QubitState2) -> PairState4:
    return PairState4(m=np.kron(a.m, b.m))


def partial_trace_B(p: PairState4) -> QubitState2:
    """(rho_A)_ij = sum_k rho_(i,k),(j,k)."""
    return QubitState2(m=np.einsum("ikjk->ij", p.m.reshape(2, 2, 2, 2)))


def partial_trace_A(p: PairState4) -> QubitState2:
    return QubitState2(m=np.einsum("kikj->ij", p.m.reshape(2, 2, 2, 2)))


def partial_transpose_B(p: PairState4 | np.ndarray) -> np.ndarray:
    """(rho^Gamma)_(i,k),(j,l) = rho_(i,l),(j,k). The result need not be positive."""
    m = p.m if isinstance(p, PairState4) else np.asarray(p, dtype=np.complex128)
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def partial_transpose_A(p: PairState4 | np.ndarray) -> np.ndarray:
    m = p.m if isinstance(p, PairState4) else np.asarray(p, dtype=np.complex128)
    return m.reshape(2, 2, 2, 2).transpose(2, 1, 0, 3).reshape(4, 4)


def plus_state() -> QubitState2:
    """(|L> + |R>)/sqrt(2), the Stern-Gerlach prepared orbital qubit."""
    return QubitState2(m=np.full((2, 2), 0.5))


def initial_pair_state() -> PairState4:
    """All entries 1/4: both particles in (|L> + |R>)/sqrt(2)."""
    return tensor(plus_state(), plus_state())


def pure_state(psi: np.ndarray) -> PairState4:
    psi = np.asarray(psi, dtype=np.complex128)
    psi = psi / np.linalg.norm(psi)
    return PairState4(m=np.outer(psi, psi.conj()))


def state_to_csv(p: PairState4 | QubitState2) -> str:
    """Row-major CSV block, each cell written as two columns re,im."""
    lines = []
    for row in p.m:
        cells = []
        for value in row:
            cells.append(f"{value.real:.16e},{value.imag:.16e}")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def state_from_csv(text: str) -> PairState4 | QubitState2:
    rows = [line for line in text.strip().splitlines() if line.strip()]
    try:
        values = [[float(cell) for cell in line.split(",")] for line in rows]
    except ValueError as e:
        raise InvalidStateError(f"Malformed matrix CSV: {e}")

    dim = len(values)
    if any(len(row) != 2 * dim for row in values):
        raise InvalidStateError("Matrix CSV rows must have 2 * dim cells")
    m = np.array([[complex(row[2 * c], row[2 * c + 1]) for c in range(dim)] for row in values])
    if dim == 2:
        return QubitState2(m=m)
    if dim == 4:
        return PairState4(m=m)
    raise InvalidStateError(f"Unsupported matrix dimension {dim}")
