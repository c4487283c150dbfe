"""
Logarithmic negativity of the pair state and the coherence left in one qubit.

The trace norm of the partial transpose is summed from the eigenvalues of the
(Hermitian) transposed matrix, found with cyclic complex Jacobi rotations.
"""
import itertools
import logging
import math

import numpy as np

from errors.entanglement import (
    EigenSolverError,
    NotHermitianError,
)
from models.entanglement import (
    EntanglementReport,
    Spectrum4,
)
from models.state import PairState4
from services.state import (
    partial_trace_B,
    partial_transpose_B,
)

logger = logging.getLogger(__name__)

HERMITIAN_TOL = 1e-10
OFF_DIAGONAL_TOL = 1e-14
MAX_SWEEPS = 50
NEGATIVITY_SNAP_TOL = 1e-10


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotation(a: np.ndarray, p: int, q: int) -> np.ndarray:
    """
    Unitary G with (G^H a G)_pq = 0: a phase on column q makes a_pq real,
    then a real Jacobi rotation removes it.
    """
    apq = a[p, q]
    magnitude = abs(apq)
    phase = apq / magnitude
    theta = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(1.0 + theta * theta))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    g = np.eye(a.shape[0], dtype=np.complex128)
    g[p, p] = c
    g[p, q] = s
    g[q, p] = -s * phase.conjugate()
    g[q, q] = c * phase.conjugate()
    return g


def hermitian_eigen(m: np.ndarray) -> Spectrum4:
    """
    Eigenvalues and eigenvectors of a 4x4 Hermitian matrix by cyclic Jacobi sweeps.

    Args:
        m: 4x4 complex matrix with ||m - m^H||_max <= 1e-10.

    Raises:
        NotHermitianError: If m is not (numerically) Hermitian or not 4x4.
        EigenSolverError: If the off-diagonal norm does not reach 1e-14 ||m||.

    Returns:
        Spectrum4 with descending eigenvalues.
    """
    a = np.array(m, dtype=np.complex128)
    if a.shape != (4, 4):
        raise NotHermitianError(f"Expected a 4x4 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)) or np.max(np.abs(a - a.conj().T)) > HERMITIAN_TOL:
        raise NotHermitianError("Matrix is not Hermitian")

    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    tol = OFF_DIAGONAL_TOL * max(1.0, float(np.linalg.norm(a)))
    v = np.eye(n, dtype=np.complex128)

    sweeps = 0
    while _off_norm(a) > tol:
        if sweeps == MAX_SWEEPS:
            raise EigenSolverError(
                f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off-diagonal norm {_off_norm(a):.3e})"
            )
        sweeps += 1
        for p, q in itertools.combinations(range(n), 2):
            if a[p, q] == 0:
                continue
            g = _rotation(a, p, q)
            a = g.conj().T @ a @ g
            a[p, q] = 0.0
            a[q, p] = 0.0
            v = v @ g
    logger.debug("Jacobi converged after %d sweeps", sweeps)

    values = np.diag(a).real
    order = np.argsort(values)[::-1]
    return Spectrum4(
        eigenvalues=tuple(float(x) for x in values[order]),
        eigenvectors=v[:, order],
        sweeps=sweeps,
    )


def trace_norm(m: np.ndarray) -> float:
    """||m||_1 of a Hermitian matrix: the sum of |eigenvalues|."""
    return float(sum(abs(x) for x in hermitian_eigen(m).eigenvalues))


def log_negativity(rho: PairState4) -> float:
    """
    E_N = log2 ||rho^Gamma||_1 in bits, with the transpose taken on qubit B.

    Trace norms within 1e-10 of 1 report exactly 0, so separable states
    never show round-off entanglement.
    """
    norm = trace_norm(partial_transpose_B(rho))
    if norm - 1.0 <= NEGATIVITY_SNAP_TOL:
        return 0.0
    return math.log2(norm)


def reduced_coherence(rho: PairState4) -> float:
    """2 |(Tr_B rho)_12|; 1 for a product of |+> states, 0 for a fully mixed marginal."""
    return 2.0 * abs(complex(partial_trace_B(rho).m[0, 1]))


def entanglement_report(rho: PairState4) -> EntanglementReport:
    norm = trace_norm(partial_transpose_B(rho))
    return EntanglementReport(
        log_negativity=log_negativity(rho),
        reduced_coherence=reduced_coherence(rho),
        trace_norm=norm,
    )
