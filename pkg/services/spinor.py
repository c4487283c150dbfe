"""
Dirac-representation gamma matrices, rest-frame spinors and the (I x sigma3)
bilinears feeding the F-tensor.
"""
import itertools
import logging
from functools import cache

import numpy as np

from errors.spinor import (
    LorentzIndexError,
    SpinorAlgebraError,
)
from models.spinor import PropagatorComponent

logger = logging.getLogger(__name__)

ETA = np.diag([1.0, -1.0, -1.0, -1.0])

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY_2 = np.eye(2, dtype=np.complex128)
_ZERO_2 = np.zeros((2, 2), dtype=np.complex128)

_GAMMA = (
    np.block([[IDENTITY_2, _ZERO_2], [_ZERO_2, -IDENTITY_2]]),
    np.block([[_ZERO_2, SIGMA_X], [-SIGMA_X, _ZERO_2]]),
    np.block([[_ZERO_2, SIGMA_Y], [-SIGMA_Y, _ZERO_2]]),
    np.block([[_ZERO_2, SIGMA_Z], [-SIGMA_Z, _ZERO_2]]),
)

# Tensor factors of the de Donder numerator, checked by verify_algebra().
PROPAGATOR_FACTORS: dict[PropagatorComponent, float] = {
    PropagatorComponent.STATIC_0000: -1.0,
    PropagatorComponent.TRANSVERSE_0303: 1.0,
}

# sigma^3 eigenvalue carried by spin r = 1, 2
SPIN_SIGNS = (1.0, -1.0)


def _check_index(mu: int) -> None:
    if mu not in (0, 1, 2, 3):
        raise LorentzIndexError(f"Lorentz index must be 0..3, got {mu}")


def gamma(mu: int) -> np.ndarray:
    """Upper-index gamma^mu in the Dirac representation."""
    _check_index(mu)
    return _GAMMA[mu].copy()


def gamma_lower(mu: int) -> np.ndarray:
    _check_index(mu)
    return ETA[mu, mu] * _GAMMA[mu]


def sigma_tensor(mu: int, nu: int) -> np.ndarray:
    """sigma_{mu nu} = (i/2) [gamma_mu, gamma_nu]."""
    g_mu = gamma_lower(mu)
    g_nu = gamma_lower(nu)
    return 0.5j * (g_mu @ g_nu - g_nu @ g_mu)


def rest_spinor(r: int) -> np.ndarray:
    """Unit-normalized rest-frame spinor for spin r in {1, 2}: upper components only."""
    if r not in (1, 2):
        raise SpinorAlgebraError(f"Spin label must be 1 or 2, got {r}")
    u = np.zeros(4, dtype=np.complex128)
    u[r - 1] = 1.0
    return u


def dirac_adjoint(u: np.ndarray) -> np.ndarray:
    return u.conj() @ _GAMMA[0]


def bilinear(rprime: int, r: int, matrix: np.ndarray) -> complex:
    return complex(dirac_adjoint(rest_spinor(rprime)) @ matrix @ rest_spinor(r))


def bilinear_sigma3(rprime: int, r: int) -> float:
    """u_bar_{r'} (I x sigma3) u_r for rest-frame spinors: s3_r delta_{r' r}."""
    value = bilinear(rprime, r, np.kron(IDENTITY_2, SIGMA_Z))
    return float(value.real)


@cache
def bilinear_matrix() -> np.ndarray:
    """2x2 matrix B[r', r] of the sigma3 bilinears (0-based spin indices)."""
    out = np.array(
        [[bilinear_sigma3(rp + 1, r + 1) for r in range(2)] for rp in range(2)]
    )
    out.setflags(write=False)
    return out


def propagator_factor(c: PropagatorComponent) -> float:
    """
    Numerator of D^{mu nu mu' nu'} multiplying 1/|K|^2, read off the metric:
    -(eta^{mu mu'} eta^{nu nu'} + eta^{mu nu'} eta^{nu mu'} - eta^{mu nu} eta^{mu' nu'}).
    """
    mu, nu, mup, nup = c.indices
    return float(
        -(ETA[mu, mup] * ETA[nu, nup] + ETA[mu, nup] * ETA[nu, mup] - ETA[mu, nu] * ETA[mup, nup])
    )


def static_charge_sum() -> float:
    """Sum over spins of s3_r * u_bar_r gamma^0 u_r; vanishes, so the (00,00) channel is inert."""
    return sum(
        SPIN_SIGNS[r - 1] * bilinear(r, r, _GAMMA[0]).real for r in (1, 2)
    )


def verify_algebra(tol: float = 1e-14) -> None:
    """
    Startup self-check of every algebraic input to the F-tensor.

    Raises:
        SpinorAlgebraError: If the Clifford algebra, the bilinears or the
            stored propagator factors do not hold.
    """
    identity = np.eye(4)
    for mu, nu in itertools.product(range(4), repeat=2):
        anti = _GAMMA[mu] @ _GAMMA[nu] + _GAMMA[nu] @ _GAMMA[mu]
        if np.max(np.abs(anti - 2.0 * ETA[mu, nu] * identity)) > tol:
            raise SpinorAlgebraError(f"Clifford relation fails for ({mu}, {nu})")

    if not np.array_equal(bilinear_matrix(), np.diag(SPIN_SIGNS)):
        raise SpinorAlgebraError(f"sigma3 bilinears are {bilinear_matrix().tolist()}, expected diag(+1, -1)")

    for component, stored in PROPAGATOR_FACTORS.items():
        if propagator_factor(component) != stored:
            raise SpinorAlgebraError(
                f"Propagator factor for {component.value} is {propagator_factor(component)}, stored {stored}"
            )

    if abs(static_charge_sum()) > tol:
        raise SpinorAlgebraError("Spin-weighted gamma^0 charge does not vanish")
    logger.debug("Spinor algebra verified")
