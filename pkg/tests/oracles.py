"""
Slow, independent references for the test suite: numerical quadrature for the
wave-packet kernel, state-vector phase evolution, and eigenvalues from the
characteristic polynomial.
"""
import math

import numpy as np
from scipy import (
    integrate,
    optimize,
)

from models.geometry import (
    Geometry,
    Path,
)
from models.state import PairState4


class OracleConvergenceError(Exception):
    pass


QUADRATURE_TOL = 1e-8
MAX_DIRECT_OSCILLATIONS = 200
GAUSSIAN_CUTOFF = 12.0


def kernel_by_quadrature(R: float, sigma: float) -> float:
    """
    I(R) = int d^3K e^{iK.R} e^{-sigma^2 K^2 / 2} / ((2 pi)^3 K^2)
         = 1 / (2 pi^2 R) int_0^inf e^{-sigma^2 K^2 / 2} sin(K R) / K dK.

    Few oscillations before the Gaussian cutoff: plain adaptive quadrature.
    Many: the first half period directly, the rest with a sine weight.

    Raises:
        OracleConvergenceError: If the quadrature error estimate exceeds 1e-8.
    """
    if R <= 0 or sigma <= 0:
        raise ValueError("R and sigma must be positive")

    def damped_sinc(k: float) -> float:
        if k == 0.0:
            return R
        return math.exp(-0.5 * sigma**2 * k**2) * math.sin(k * R) / k

    cutoff = GAUSSIAN_CUTOFF / sigma
    oscillations = cutoff * R / (2.0 * math.pi)
    if oscillations <= MAX_DIRECT_OSCILLATIONS:
        value, abserr = integrate.quad(damped_sinc, 0.0, cutoff, limit=1000, epsabs=1e-13, epsrel=1e-12)
    else:
        split = math.pi / R
        head, head_err = integrate.quad(damped_sinc, 0.0, split, limit=1000, epsabs=1e-13, epsrel=1e-12)
        tail, tail_err = integrate.quad(
            lambda k: math.exp(-0.5 * sigma**2 * k**2) / k,
            split,
            np.inf,
            weight="sin",
            wvar=R,
            epsabs=1e-11,
            limlst=200,
        )
        value, abserr = head + tail, head_err + tail_err

    if abserr > QUADRATURE_TOL:
        raise OracleConvergenceError(f"Quadrature error {abserr:.2e} exceeds {QUADRATURE_TOL:.0e}")
    return value / (2.0 * math.pi**2 * R)


def statevector_evolution(g: Geometry, coupling: float, tau: float, hbar: float = 1.0, kernel=None) -> PairState4:
    """
    Evolve the four path-pair amplitudes directly: c_ab = (1/2) e^{+i phi_ab},
    phi_ab = coupling tau K(|x_a - x'_b|) / hbar, and return |psi><psi|.
    """
    kernel = kernel or (lambda r: 1.0 / r)
    amplitudes = []
    for path_a in (Path.L, Path.R):
        for path_b in (Path.L, Path.R):
            distance = abs(g.position_a(path_a) - g.position_b(path_b))
            phi = coupling * tau * kernel(distance) / hbar
            amplitudes.append(0.5 * complex(math.cos(phi), math.sin(phi)))
    psi = np.array(amplitudes)
    return PairState4(m=np.outer(psi, psi.conj()))


def charpoly_coefficients(m: np.ndarray) -> np.ndarray:
    """det(x I - m) = sum_k c[k] x^k, from the Faddeev-LeVerrier recursion."""
    a = np.asarray(m, dtype=np.complex128)
    n = a.shape[0]
    coefficients = np.zeros(n + 1, dtype=np.complex128)
    coefficients[n] = 1.0
    previous = np.zeros_like(a)
    identity = np.eye(n, dtype=np.complex128)
    for k in range(1, n + 1):
        current = a @ previous + coefficients[n - k + 1] * identity
        coefficients[n - k] = -np.trace(a @ current) / k
        previous = current
    return coefficients.real


def _evaluate(coefficients: np.ndarray, x: float) -> float:
    total = 0.0
    for c in coefficients[::-1]:
        total = total * x + c
    return total


def _real_roots(coefficients: np.ndarray, lo: float, hi: float) -> list[float]:
    """All roots of a polynomial with only real roots, via the roots of its derivative."""
    degree = len(coefficients) - 1
    if degree == 1:
        return [-coefficients[0] / coefficients[1]]

    derivative = np.array([k * coefficients[k] for k in range(1, degree + 1)])
    critical = _real_roots(derivative, lo, hi)
    edges = [lo, *critical, hi]

    roots = []
    for a, b in zip(edges[:-1], edges[1:]):
        fa, fb = _evaluate(coefficients, a), _evaluate(coefficients, b)
        if fa * fb > 0:
            # touching root (even multiplicity) or rounding at a repeated root
            roots.append(a if abs(fa) <= abs(fb) else b)
            continue
        try:
            roots.append(optimize.brentq(lambda x: _evaluate(coefficients, x), a, b, xtol=1e-14, maxiter=500))
        except RuntimeError as e:
            raise OracleConvergenceError(f"Root search failed on [{a}, {b}]: {e}")
    return roots


def eigs_by_charpoly(m: np.ndarray) -> list[float]:
    """Eigenvalues of a Hermitian matrix, descending."""
    coefficients = charpoly_coefficients(m)
    bound = 1.0 + float(np.max(np.abs(coefficients[:-1])))
    return sorted(_real_roots(coefficients, -bound, bound), reverse=True)
