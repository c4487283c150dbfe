import numpy as np

from models.state import QubitState2


def random_qubit(rng) -> QubitState2:
    x = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    m = x @ x.conj().T
    return QubitState2(m=m / np.trace(m).real)


def random_hermitian(rng, n: int = 4) -> np.ndarray:
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return 0.5 * (x + x.conj().T)


def assert_physical(rho, purity: bool = True) -> None:
    m = rho.m
    assert np.max(np.abs(m - m.conj().T)) <= 1e-12
    assert abs(np.trace(m) - 1.0) <= 1e-12
    assert np.min(np.linalg.eigvalsh(m)) >= -1e-10
    if purity:
        assert abs(np.trace(m @ m).real - 1.0) <= 1e-9
