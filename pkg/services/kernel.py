"""
Interaction kernels K(R) replacing 1/R in the forward-scattering rates.

The wave-packet kernel is the Gaussian-smeared Coulomb kernel
K(R) = erf(R / (sqrt(2) sigma)) / R with sigma^2 = 2 (sigma0^2 + sigma0'^2).
"""
import math
from collections.abc import Callable

from scipy import special

from models.evolution import WavePacketWidths

Kernel = Callable[[float], float]


def erf(x: float) -> float:
    return float(special.erf(x))


def point_kernel(r: float) -> float:
    return 1.0 / r


def wavepacket_kernel(w: WavePacketWidths) -> Kernel:
    sigma = w.sigma_eff
    if sigma == 0.0:
        return point_kernel

    scale = math.sqrt(2.0) * sigma
    contact_limit = 2.0 / (math.sqrt(2.0 * math.pi) * sigma)

    def kernel(r: float) -> float:
        if r == 0.0:
            return contact_limit
        return erf(r / scale) / r

    return kernel
