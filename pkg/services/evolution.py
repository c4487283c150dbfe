"""
Forward-scattering dynamics of the two-qubit density matrix.

Every coherence rho_IJ rotates at its own constant rate,
d rho_IJ / dt = i g (K(R_I) - K(R_J)) / hbar * rho_IJ, where g is the model
coupling strength (G m1 m2 for Model I) and R_I the separation of the path
pair I. The rates are assembled from the spinor F-tensor, integrated with
fixed-step RK4, and checked against the closed-form phase solution.
"""
import itertools
import logging
import math
from abc import (
    ABC,
    abstractmethod,
)

import numpy as np

from config import settings
from errors.evolution import (
    IntegrationError,
    MissingMagneticFieldError,
    SignCalibrationError,
)
from models.evolution import (
    CouplingKind,
    CouplingModel,
    PhasePair,
    RateMatrix,
)
from models.geometry import Geometry
from models.spinor import (
    PropagatorComponent,
    SignConvention,
)
from models.state import (
    PairState4,
    QubitState2,
)
from models.units import (
    Dimension,
    UnitMode,
    UnitSystem,
)
from services import spinor
from services.geometry import (
    spin_separation,
    validate,
)
from services.kernel import (
    Kernel,
    point_kernel,
)
from services.state import (
    initial_pair_state,
    plus_state,
)
from services.units import (
    C_SI,
    E_CHARGE,
    HBAR_SI,
    convert_value,
    natural_units,
)

logger = logging.getLogger(__name__)

# F = ORIENTATION * (gain - loss); -1 reproduces the rate list d rho_12/dt = +i dx/(d(d+dx)) rho_12.
ORIENTATION = -1


def coupling_strength(c: CouplingModel, u: UnitSystem) -> float:
    """
    Effective coupling g in units of G * mass^2 of the unit system u.

    Model I couples the masses, g = G m1 m2. Model II replaces m1 m2 by
    omega1 omega2 / 4 with Larmor frequencies omega_i = B3 / m_i, which is only
    meaningful in natural units, so SI inputs go through the natural system
    and come back as g_natural * hbar * c.

    Raises:
        MissingMagneticFieldError: If a Model II coupling has no B3.
    """
    match c.kind:
        case CouplingKind.STATIC:
            # the (00,00) channel carries no spin-weighted charge, see spinor.static_charge_sum
            return 0.0
        case CouplingKind.MODEL_I:
            return u.G * c.m1 * c.m2
        case CouplingKind.MODEL_II:
            if c.B3 is None:
                raise MissingMagneticFieldError("Model II needs a magnetic field B3")
            if u.mode == UnitMode.NATURAL:
                omega1, omega2 = c.larmor()
                return u.G * omega1 * omega2 / 4.0
            nat = natural_units(u.G * E_CHARGE**2 / (HBAR_SI * C_SI**5))
            b3 = convert_value(c.B3, Dimension.MAGNETIC_FIELD, u, nat)
            m1 = convert_value(c.m1, Dimension.MASS, u, nat)
            m2 = convert_value(c.m2, Dimension.MASS, u, nat)
            return nat.G * (b3 / m1) * (b3 / m2) / 4.0 * u.hbar * u.c
        case _:
            raise ValueError(f"Unknown coupling kind: {c.kind}")


def phase_pair(
    c: CouplingModel,
    g: Geometry,
    tau: float,
    u: UnitSystem,
    kernel: Kernel = point_kernel,
) -> PhasePair:
    """
    Accumulated phases phi_ab = g_c tau K(R_ab) / hbar relative to phi = phi_LL.

    With the point kernel K = 1/R this is the textbook result
    dphi_RL = g tau dx / (hbar d (d - dx)), dphi_LR = -g tau dx / (hbar d (d + dx)).
    """
    validate(g, allow_collapsed=True)
    if tau < 0:
        raise IntegrationError(f"Evolution time must be non-negative, got {tau}")

    scale = coupling_strength(c, u) * tau / u.hbar
    k_common = kernel(g.d)
    k_far = kernel(g.d + g.dx)
    k_near = kernel(g.d - g.dx)

    if kernel is point_kernel:
        phase_sum = scale * 2.0 * g.dx**2 / (g.d * (g.d**2 - g.dx**2))
    else:
        phase_sum = scale * ((k_near - k_common) + (k_far - k_common))

    return PhasePair(
        dphi_LR=scale * (k_far - k_common),
        dphi_RL=scale * (k_near - k_common),
        phi_common=scale * k_common,
        phase_sum=phase_sum,
    )


def _spin_label_weight(r: int, s: int) -> float:
    # The Stern-Gerlach split ties spin to path, so the sigma3 sign of each
    # spin is already carried by the path label: weight = 1 / (b_rr b_ss).
    bil = spinor.bilinear_matrix()
    return 1.0 / (bil[r, r] * bil[s, s])


def sign_convention() -> SignConvention:
    bil = spinor.bilinear_matrix()
    return SignConvention(
        bilinear_diagonal=(float(bil[0, 0]), float(bil[1, 1])),
        spin_label_weight="1/(b_rr*b_ss)",
        orientation=ORIENTATION,
        rate_prefactor="d rho_IJ/dt = -i (kappa^2/16pi) (g_c/G) F_IJ / hbar; F_IJ/rho_IJ = K(R_J) - K(R_I)",
        propagator_factors={
            component.value: spinor.propagator_factor(component) for component in PropagatorComponent
        },
    )


def assemble_F(
    rho_a: QubitState2,
    rho_b: QubitState2,
    g: Geometry,
    kernel: Kernel = point_kernel,
) -> np.ndarray:
    """
    The F-tensor of the forward-scattering term, folded to 4x4 (I = 2i + k, J = 2j + l).

    Brute-force quadruple spin sum over r, r', s, s' of
    K(R_sr) b_{s's} b_{r'r} w_rs [d_ri d_sk rhoA_{r'j} rhoB_{s'l} - d_jr' d_ls' rhoA_ir rhoB_ks],
    with b the sigma3 bilinears and w_rs the spin-label weight. The weight
    1 / (b_rr b_ss) cancels the bilinears on the diagonal, so the overall sign
    comes from ORIENTATION alone.
    """
    validate(g, allow_collapsed=True)
    bil = spinor.bilinear_matrix()
    a = rho_a.m
    b = rho_b.m
    # kernel_rs[s, r] = K(R_sr)
    kernel_rs = np.array(
        [[kernel(spin_separation(g, r, s)) for r in range(2)] for s in range(2)]
    )

    f = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    for i, j, k, l in itertools.product(range(2), repeat=4):
        total = 0j
        for r, rp, s, sp in itertools.product(range(2), repeat=4):
            weight = kernel_rs[s, r] * bil[sp, s] * bil[rp, r] * _spin_label_weight(r, s)
            if weight == 0.0:
                continue
            gain = a[rp, j] * b[sp, l] if (r == i and s == k) else 0.0
            loss = a[i, r] * b[k, s] if (j == rp and l == sp) else 0.0
            total += weight * (gain - loss)
        f[i, k, j, l] = ORIENTATION * total
    return f.reshape(4, 4)


def rate_matrix(
    c: CouplingModel,
    g: Geometry,
    u: UnitSystem,
    kernel: Kernel = point_kernel,
) -> RateMatrix:
    """
    Per-entry rates lambda_IJ = -i g_c F_IJ / (hbar rho_IJ).

    F is assembled on the all-1/4 product state, whose entries are all nonzero;
    the forward-scattering rates do not depend on the state.
    """
    validate(g, allow_collapsed=True)
    coupling = coupling_strength(c, u)
    if coupling == 0.0:
        return RateMatrix.zero()

    reference = initial_pair_state()
    f = assemble_F(plus_state(), plus_state(), g, kernel)
    return RateMatrix(rates=-1j * (coupling / u.hbar) * (f / reference.m))


def _hermitian_normalized(rho: np.ndarray) -> PairState4:
    rho = 0.5 * (rho + rho.conj().T)
    return PairState4(m=rho / np.trace(rho).real)


def evolve_rk4(rho0: PairState4, rm: RateMatrix, tau: float, steps: int) -> PairState4:
    """Classical fixed-step RK4 for the entrywise linear ODEs."""
    if steps < 1:
        raise IntegrationError(f"RK4 needs at least one step, got {steps}")
    if tau < 0:
        raise IntegrationError(f"Evolution time must be non-negative, got {tau}")

    rates = rm.rates
    rho = rho0.m.copy()
    dt = tau / steps
    for _ in range(steps):
        k1 = rates * rho
        k2 = rates * (rho + 0.5 * dt * k1)
        k3 = rates * (rho + 0.5 * dt * k2)
        k4 = rates * (rho + dt * k3)
        rho = rho + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return _hermitian_normalized(rho)


def evolve_trace(rho0: PairState4, rm: RateMatrix, taus, steps: int) -> list[PairState4]:
    """State at each requested time, each integrated from rho0 with the same step count."""
    return [evolve_rk4(rho0, rm, float(tau), steps) for tau in taus]


def _phase_vector(p: PhasePair) -> np.ndarray:
    return np.exp(1j * np.array([0.0, p.dphi_LR, p.dphi_RL, 0.0]))


def closed_form_state(p: PhasePair) -> PairState4:
    """
    Evolved state of the all-1/4 start:
    (1/4) [[1, e^{-i dLR}, e^{-i dRL}, 1], ..., Hermitian, unit diagonal].
    """
    v = _phase_vector(p) / 2.0
    return PairState4(m=np.outer(v, v.conj()))


def propagate_closed_form(rho0: PairState4, p: PhasePair) -> PairState4:
    """rho_IJ(tau) = rho_IJ(0) e^{i (theta_I - theta_J)}, theta = (0, dLR, dRL, 0)."""
    v = _phase_vector(p)
    return _hermitian_normalized(rho0.m * np.outer(v, v.conj()))


def verify_sign_convention(tol: float = 1e-14) -> None:
    """
    Startup check: at d = 2, dx = 1 and g_c / hbar = 1 the assembled rates must
    equal the rate list i/6, -i/2, -2i/3, -i/6, i/2 for (12, 13, 23, 24, 34).

    Raises:
        SignCalibrationError: If any assembled rate disagrees.
    """
    expected = {
        (0, 1): 1j / 6.0,
        (0, 2): -1j / 2.0,
        (0, 3): 0.0,
        (1, 2): -2j / 3.0,
        (1, 3): -1j / 6.0,
        (2, 3): 1j / 2.0,
    }
    model = CouplingModel(kind=CouplingKind.MODEL_I, m1=1.0, m2=1.0)
    rates = rate_matrix(model, Geometry(d=2.0, dx=1.0), natural_units(G=1.0)).rates
    for (row, col), value in expected.items():
        if abs(rates[row, col] - value) > tol:
            raise SignCalibrationError(
                f"Assembled rate ({row + 1},{col + 1}) is {rates[row, col]}, expected {value}"
            )
    logger.debug("Sign convention verified: %s", sign_convention().explain().replace("\n", "; "))


class Evolver(ABC):
    @abstractmethod
    def evolve(
        self,
        rho0: PairState4,
        coupling: CouplingModel,
        geometry: Geometry,
        tau: float,
    ) -> PairState4:
        pass

    @abstractmethod
    def phases(self, coupling: CouplingModel, geometry: Geometry, tau: float) -> PhasePair:
        pass


class ClosedFormEvolver(Evolver):
    def __init__(self, units: UnitSystem, kernel: Kernel = point_kernel):
        self._units = units
        self._kernel = kernel

    def phases(self, coupling: CouplingModel, geometry: Geometry, tau: float) -> PhasePair:
        return phase_pair(coupling, geometry, tau, self._units, self._kernel)

    def evolve(
        self,
        rho0: PairState4,
        coupling: CouplingModel,
        geometry: Geometry,
        tau: float,
    ) -> PairState4:
        return propagate_closed_form(rho0, self.phases(coupling, geometry, tau).wrapped())


class RateEquationEvolver(Evolver):
    def __init__(
        self,
        units: UnitSystem,
        kernel: Kernel = point_kernel,
        steps: int = settings.RK4_STEPS,
        max_steps: int = settings.RK4_MAX_STEPS,
        max_step_phase: float = settings.RK4_MAX_STEP_PHASE,
    ):
        self._units = units
        self._kernel = kernel
        self._steps = steps
        self._max_steps = max_steps
        self._max_step_phase = max_step_phase
        self._fallback = ClosedFormEvolver(units, kernel)

    def phases(self, coupling: CouplingModel, geometry: Geometry, tau: float) -> PhasePair:
        return phase_pair(coupling, geometry, tau, self._units, self._kernel)

    def required_steps(self, rm: RateMatrix, tau: float) -> int:
        """Configured steps, raised until every step rotates by at most max_step_phase."""
        needed = math.ceil(rm.max_rate() * tau / self._max_step_phase)
        return max(self._steps, needed)

    def evolve(
        self,
        rho0: PairState4,
        coupling: CouplingModel,
        geometry: Geometry,
        tau: float,
    ) -> PairState4:
        rm = rate_matrix(coupling, geometry, self._units, self._kernel)
        steps = self.required_steps(rm, tau)
        if steps > self._max_steps:
            logger.warning(
                "RK4 would need %d steps (limit %d) for max rate %.3e over tau=%.3e; using the closed form",
                steps,
                self._max_steps,
                rm.max_rate(),
                tau,
            )
            return self._fallback.evolve(rho0, coupling, geometry, tau)
        return evolve_rk4(rho0, rm, tau, steps)

