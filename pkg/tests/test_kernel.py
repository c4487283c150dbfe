import math

import numpy as np
import pytest

from models.evolution import WavePacketWidths
from services.kernel import (
    erf,
    point_kernel,
    wavepacket_kernel,
)


def test_erf_values(rng):
    assert erf(0.0) == 0.0
    assert erf(1.0) == pytest.approx(0.8427007929497149, abs=1e-15)
    assert erf(7.0) == pytest.approx(1.0, abs=1e-15)
    for x in rng.uniform(-6, 6, size=200):
        assert erf(-x) == -erf(x)
        assert erf(x) == pytest.approx(math.erf(x), abs=1e-12)


def test_zero_width_is_point_kernel():
    assert wavepacket_kernel(WavePacketWidths()) is point_kernel
    assert point_kernel(4.0) == 0.25


def test_effective_width():
    w = WavePacketWidths(sigma0=0.3, sigma0p=0.4)
    assert w.sigma_eff == pytest.approx(math.sqrt(2 * 0.25))


def _kernel_for_sigma(sigma: float):
    # sigma_eff = sqrt(2 (s0^2 + s0p^2)) with s0p = 0
    return wavepacket_kernel(WavePacketWidths(sigma0=sigma / math.sqrt(2.0)))


def test_coulomb_limit():
    kernel = _kernel_for_sigma(1.0)
    assert kernel(10.0) * 10.0 == pytest.approx(1.0, abs=1e-6)


def test_contact_limit():
    kernel = _kernel_for_sigma(1.0)
    limit = 2.0 / math.sqrt(2.0 * math.pi)
    assert limit == pytest.approx(0.7978846, rel=1e-7)
    assert kernel(1e-6) == pytest.approx(limit, rel=1e-4)
    assert kernel(0.0) == pytest.approx(limit, rel=1e-15)


def test_kernel_non_increasing_in_width():
    for r in np.geomspace(1e-3, 20, 40):
        values = [_kernel_for_sigma(s)(r) for s in (0.1, 0.5, 1.0, 2.0, 5.0)]
        assert all(later <= earlier for earlier, later in zip(values, values[1:]))
        assert values[0] <= point_kernel(r)
