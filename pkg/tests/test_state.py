import itertools

import numpy as np
import pytest

from errors.state import InvalidStateError
from models.state import (
    PairState4,
    QubitState2,
)
from services.state import (
    fold,
    initial_pair_state,
    partial_trace_A,
    partial_trace_B,
    partial_transpose_A,
    partial_transpose_B,
    plus_state,
    pure_state,
    state_from_csv,
    state_to_csv,
    tensor,
    unfold,
)
from tests.helpers import random_qubit


def test_initial_state_all_quarters():
    np.testing.assert_allclose(initial_pair_state().m, np.full((4, 4), 0.25))


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (np.diag([1.0, 0.0]), np.diag([1.0, 0.0]), np.diag([1.0, 0.0, 0.0, 0.0])),
        (np.diag([0.5, 0.5]), np.diag([0.5, 0.5]), np.diag([0.25] * 4)),
    ],
)
def test_tensor_examples(a, b, expected):
    np.testing.assert_allclose(tensor(QubitState2(m=a), QubitState2(m=b)).m, expected)


def test_fold_round_trip():
    for i, k in itertools.product(range(2), repeat=2):
        assert unfold(fold(i, k)) == (i, k)
    assert [fold(i, k) for i, k in itertools.product(range(2), repeat=2)] == [0, 1, 2, 3]


def test_tensor_index_fold(rng):
    a, b = random_qubit(rng), random_qubit(rng)
    p = tensor(a, b)
    for big_i, big_j in itertools.product(range(4), repeat=2):
        i, k = unfold(big_i)
        j, l = unfold(big_j)
        assert p.m[big_i, big_j] == pytest.approx(a.m[i, j] * b.m[k, l], abs=1e-15)


def test_partial_traces(rng):
    assert np.allclose(partial_trace_B(PairState4(m=np.diag([0.25] * 4))).m, np.diag([0.5, 0.5]))
    assert np.allclose(partial_trace_B(initial_pair_state()).m, plus_state().m)
    for _ in range(50):
        a, b = random_qubit(rng), random_qubit(rng)
        np.testing.assert_allclose(partial_trace_B(tensor(a, b)).m, a.m, atol=1e-14)
        np.testing.assert_allclose(partial_trace_A(tensor(a, b)).m, b.m, atol=1e-14)


def test_partial_transpose_properties(rng):
    for _ in range(50):
        p = tensor(random_qubit(rng), random_qubit(rng))
        pt = partial_transpose_B(p)
        assert np.max(np.abs(pt - pt.conj().T)) <= 1e-14
        assert np.trace(pt) == pytest.approx(1.0, abs=1e-14)
        assert np.min(np.linalg.eigvalsh(pt)) >= -1e-10
        np.testing.assert_array_equal(partial_transpose_B(pt), p.m)


def test_partial_transpose_bell_state():
    bell = pure_state(np.array([1.0, 0.0, 0.0, 1.0]))
    assert np.min(np.linalg.eigvalsh(partial_transpose_B(bell))) == pytest.approx(-0.5, abs=1e-12)
    assert np.min(np.linalg.eigvalsh(partial_transpose_A(bell))) == pytest.approx(-0.5, abs=1e-12)


@pytest.mark.parametrize(
    "matrix",
    [
        np.eye(3) / 3,
        np.diag([0.5, 0.5, 0.5, 0.5]),
        np.array([[0.5, 0.1], [0.2, 0.5]]),
        np.diag([1.5, -0.5]),
        np.array([[np.nan, 0], [0, 1]]),
    ],
)
def test_invalid_states_rejected(matrix):
    with pytest.raises(InvalidStateError):
        QubitState2(m=matrix) if matrix.shape == (2, 2) else PairState4(m=matrix)


def test_state_is_read_only():
    with pytest.raises(ValueError):
        initial_pair_state().m[0, 0] = 1.0


def test_purity():
    assert initial_pair_state().purity() == pytest.approx(1.0)
    assert PairState4(m=np.diag([0.25] * 4)).purity() == pytest.approx(0.25)


def test_csv_block(rng):
    p = pure_state(rng.normal(size=4) + 1j * rng.normal(size=4))
    text = state_to_csv(p)
    assert len(text.splitlines()) == 4
    assert all(len(line.split(",")) == 8 for line in text.splitlines())
    np.testing.assert_allclose(state_from_csv(text).m, p.m, atol=1e-15)


def test_csv_block_malformed():
    with pytest.raises(InvalidStateError):
        state_from_csv("1,0,x\n")
    with pytest.raises(InvalidStateError):
        state_from_csv("1,0,0\n0,0,1\n")
