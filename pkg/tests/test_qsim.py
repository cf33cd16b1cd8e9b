import numpy as np
import pytest

from conftest import random_state, random_unit_vector
from qsar.errors import CapacityError, ShapeError
from qsar.qsim import (
    MAX_QUBITS,
    Circuit,
    ControlledPhase,
    Diagonal,
    Hadamard,
    Phase,
    StateVector,
    Swap,
    apply_controlled_phase,
    apply_diagonal,
    apply_gate,
    apply_hadamard,
    apply_phase,
    apply_swap,
    inner_product,
    new_zero_state,
    run_circuit,
)

# --- independent dense-matrix oracle -----------------------------------------
#
# Built from the tensor-product definition (single-qubit gates) or the
# basis-index rule (two-qubit and diagonal gates), never from the strided
# kernels under test.

_I2 = np.eye(2, dtype=np.complex128)
_H2 = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / np.sqrt(2.0)


def _embed_single(mat2, target, n):
    out = np.array([[1.0 + 0.0j]])
    for q in range(n - 1, -1, -1):
        out = np.kron(out, mat2 if q == target else _I2)
    return out


def dense_gate_matrix(op, n):
    dim = 1 << n
    if isinstance(op, Hadamard):
        return _embed_single(_H2, op.target, n)
    if isinstance(op, Phase):
        p2 = np.diag([1.0, np.exp(1j * op.theta)]).astype(np.complex128)
        return _embed_single(p2, op.target, n)
    if isinstance(op, ControlledPhase):
        idx = np.arange(dim)
        both = ((idx >> op.control) & 1) * ((idx >> op.target) & 1)
        return np.diag(np.exp(1j * op.theta * both))
    if isinstance(op, Swap):
        idx = np.arange(dim)
        bit_a = (idx >> op.a) & 1
        bit_b = (idx >> op.b) & 1
        swapped = idx & ~((1 << op.a) | (1 << op.b))
        swapped |= (bit_b << op.a) | (bit_a << op.b)
        mat = np.zeros((dim, dim), dtype=np.complex128)
        mat[swapped, idx] = 1.0
        return mat
    if isinstance(op, Diagonal):
        return np.diag(np.exp(1j * op.phases))
    raise TypeError(op)


def _sample_ops(n, rng):
    theta = float(rng.uniform(-np.pi, np.pi))
    qubits = rng.permutation(n)
    ops = [Hadamard(int(qubits[0])), Phase(int(qubits[0]), theta)]
    if n >= 2:
        a, b = int(qubits[0]), int(qubits[1])
        ops.append(ControlledPhase(a, b, theta))
        ops.append(Swap(a, b))
    ops.append(Diagonal(rng.uniform(-np.pi, np.pi, 1 << n)))
    return ops


class TestStateVector:
    def test_zero_state_one_qubit(self):
        state = new_zero_state(1)
        assert np.array_equal(state.amps, [1.0, 0.0])

    def test_zero_state_twelve_qubits(self):
        state = new_zero_state(12)
        assert state.amps.shape == (4096,)
        assert state.amps[0] == 1.0
        assert np.count_nonzero(state.amps) == 1

    @pytest.mark.parametrize("bad", [0, -1, 25, 2.5, "3"])
    def test_capacity_bounds(self, bad):
        with pytest.raises(CapacityError):
            new_zero_state(bad)

    def test_max_qubits_is_twenty_four(self):
        assert MAX_QUBITS == 24

    def test_from_vector_infers_size(self):
        state = StateVector.from_vector([0.0, 1.0, 0.0, 0.0])
        assert state.n_qubits == 2

    @pytest.mark.parametrize("length", [3, 5, 6, 7])
    def test_from_vector_rejects_non_power_of_two(self, length):
        with pytest.raises(ShapeError):
            StateVector.from_vector(np.ones(length))

    def test_constructor_length_mismatch(self):
        with pytest.raises(ShapeError):
            StateVector(2, np.ones(8, dtype=np.complex128))

    def test_copy_is_independent(self, rng):
        state = random_state(3, rng)
        clone = state.copy()
        apply_hadamard(state, 0)
        assert not np.array_equal(clone.amps, state.amps)


class TestGatesAgainstDenseOracle:
    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_every_gate_matches_matrix_action(self, n):
        rng = np.random.default_rng(1234 + n)
        for trial in range(5):
            for op in _sample_ops(n, rng):
                vec = random_unit_vector(1 << n, rng)
                expected = dense_gate_matrix(op, n) @ vec
                state = StateVector(n, vec)
                apply_gate(state, op)
                np.testing.assert_allclose(state.amps, expected, atol=1e-12)


class TestGateAlgebra:
    def test_hadamard_on_zero(self):
        state = apply_hadamard(new_zero_state(1), 0)
        np.testing.assert_allclose(state.amps, [1 / np.sqrt(2), 1 / np.sqrt(2)], atol=1e-15)

    def test_hadamard_on_one(self):
        state = apply_hadamard(StateVector.from_vector([0.0, 1.0]), 0)
        np.testing.assert_allclose(state.amps, [1 / np.sqrt(2), -1 / np.sqrt(2)], atol=1e-15)

    def test_hadamard_involution(self, rng):
        state = random_state(5, rng)
        original = state.amps.copy()
        apply_hadamard(apply_hadamard(state, 3), 3)
        np.testing.assert_allclose(state.amps, original, atol=1e-12)

    def test_phase_fixes_zero_component(self):
        state = apply_phase(new_zero_state(1), 0, 1.3)
        np.testing.assert_allclose(state.amps, [1.0, 0.0], atol=1e-15)

    def test_phase_pi_turns_plus_into_minus(self):
        state = apply_hadamard(new_zero_state(1), 0)
        apply_phase(state, 0, np.pi)
        np.testing.assert_allclose(state.amps, [1 / np.sqrt(2), -1 / np.sqrt(2)], atol=1e-15)

    def test_phase_inverse_pair(self, rng):
        state = random_state(4, rng)
        original = state.amps.copy()
        apply_phase(apply_phase(state, 2, 0.77), 2, -0.77)
        np.testing.assert_allclose(state.amps, original, atol=1e-12)

    @pytest.mark.parametrize("basis", [0, 1, 2])
    def test_controlled_phase_leaves_other_basis_states(self, basis):
        vec = np.zeros(4, dtype=np.complex128)
        vec[basis] = 1.0
        state = apply_controlled_phase(StateVector.from_vector(vec), 0, 1, 0.9)
        np.testing.assert_allclose(state.amps, vec, atol=1e-15)

    def test_controlled_phase_on_eleven(self):
        # R_k with k=2 applied to |11> multiplies by exp(2*pi*i/4) = i.
        vec = np.array([0.0, 0.0, 0.0, 1.0], dtype=np.complex128)
        state = apply_controlled_phase(StateVector.from_vector(vec), 0, 1, 2 * np.pi / 4)
        np.testing.assert_allclose(state.amps[3], 1j, atol=1e-15)

    def test_controlled_phase_symmetry(self, rng):
        vec = random_unit_vector(8, rng)
        a = apply_controlled_phase(StateVector.from_vector(vec), 0, 2, 0.61)
        b = apply_controlled_phase(StateVector.from_vector(vec), 2, 0, 0.61)
        np.testing.assert_allclose(a.amps, b.amps, atol=1e-15)

    def test_swap_basis_state(self):
        state = apply_swap(StateVector.from_vector([0.0, 1.0, 0.0, 0.0]), 0, 1)
        np.testing.assert_allclose(state.amps, [0.0, 0.0, 1.0, 0.0], atol=1e-15)

    def test_swap_involution(self, rng):
        state = random_state(4, rng)
        original = state.amps.copy()
        apply_swap(apply_swap(state, 1, 3), 1, 3)
        np.testing.assert_allclose(state.amps, original, atol=1e-15)

    def test_diagonal_zero_phases_is_identity(self, rng):
        state = random_state(3, rng)
        original = state.amps.copy()
        apply_diagonal(state, np.zeros(8))
        np.testing.assert_allclose(state.amps, original, atol=1e-15)

    def test_diagonal_preserves_magnitudes(self, rng):
        state = random_state(5, rng)
        before = np.abs(state.amps.copy())
        apply_diagonal(state, rng.uniform(-np.pi, np.pi, 32))
        np.testing.assert_allclose(np.abs(state.amps), before, rtol=1e-15, atol=0)

    def test_diagonal_phases_add(self, rng):
        p1 = rng.uniform(-1, 1, 8)
        p2 = rng.uniform(-1, 1, 8)
        a = random_state(3, rng)
        b = a.copy()
        apply_diagonal(apply_diagonal(a, p1), p2)
        apply_diagonal(b, p1 + p2)
        np.testing.assert_allclose(a.amps, b.amps, atol=1e-15)

    def test_gates_are_linear(self, rng):
        v1 = random_unit_vector(8, rng)
        v2 = random_unit_vector(8, rng)
        alpha, beta = 0.3 - 0.2j, 1.1 + 0.4j
        for op in _sample_ops(3, rng):
            mixed = StateVector(3, alpha * v1 + beta * v2)
            apply_gate(mixed, op)
            parts = []
            for v in (v1, v2):
                s = StateVector(3, v)
                apply_gate(s, op)
                parts.append(s.amps)
            np.testing.assert_allclose(
                mixed.amps, alpha * parts[0] + beta * parts[1], atol=1e-12
            )

    def test_norm_preserved_by_every_gate(self, rng):
        state = random_state(6, rng)
        for op in _sample_ops(6, rng):
            apply_gate(state, op)
            assert abs(state.norm() - 1.0) < 1e-12


class TestCircuit:
    def test_empty_circuit_is_identity(self, rng):
        state = random_state(3, rng)
        original = state.amps.copy()
        run_circuit(state, Circuit(3, []))
        np.testing.assert_allclose(state.amps, original, atol=0)

    def test_inverse_reverses_and_negates(self):
        circuit = Circuit(3, [Hadamard(0), Phase(1, 0.5), ControlledPhase(0, 2, 0.25)])
        inv = circuit.inverse()
        assert inv.ops[0] == ControlledPhase(0, 2, -0.25)
        assert inv.ops[1] == Phase(1, -0.5)
        assert inv.ops[2] == Hadamard(0)

    def test_circuit_then_inverse_is_identity(self, rng):
        ops = []
        for _ in range(4):
            ops.extend(_sample_ops(4, rng))
        circuit = Circuit(4, ops)
        state = random_state(4, rng)
        original = state.amps.copy()
        run_circuit(state, circuit)
        run_circuit(state, circuit.inverse())
        np.testing.assert_allclose(state.amps, original, atol=1e-10)

    def test_register_size_mismatch(self, rng):
        with pytest.raises(ShapeError):
            run_circuit(random_state(3, rng), Circuit(4, [Hadamard(0)]))


class TestInnerProduct:
    def test_self_inner_product_is_one(self, rng):
        state = random_state(4, rng)
        assert inner_product(state, state) == pytest.approx(1.0, abs=1e-12)

    def test_orthogonal_basis_states(self):
        a = StateVector.from_vector([1.0, 0.0])
        b = StateVector.from_vector([0.0, 1.0])
        assert inner_product(a, b) == 0.0

    def test_unitary_invariance(self, rng):
        a, b = random_state(4, rng), random_state(4, rng)
        before = inner_product(a, b)
        for op in _sample_ops(4, rng):
            apply_gate(a, op)
            apply_gate(b, op)
        assert abs(inner_product(a, b) - before) < 1e-12

    def test_size_mismatch(self, rng):
        with pytest.raises(ShapeError):
            inner_product(random_state(2, rng), random_state(3, rng))


class TestErrors:
    def test_bad_target_index(self, rng):
        state = random_state(3, rng)
        with pytest.raises(IndexError):
            apply_hadamard(state, 3)
        with pytest.raises(IndexError):
            apply_phase(state, -1, 0.5)

    def test_control_equals_target(self, rng):
        with pytest.raises(ValueError):
            apply_controlled_phase(random_state(3, rng), 1, 1, 0.5)

    def test_swap_same_qubit(self, rng):
        with pytest.raises(ValueError):
            apply_swap(random_state(3, rng), 2, 2)

    def test_non_finite_angle(self, rng):
        with pytest.raises(ValueError):
            apply_phase(random_state(2, rng), 0, np.inf)
        with pytest.raises(ValueError):
            apply_controlled_phase(random_state(2, rng), 0, 1, np.nan)

    def test_diagonal_wrong_length(self, rng):
        with pytest.raises(ShapeError):
            apply_diagonal(random_state(3, rng), np.zeros(4))

    def test_diagonal_non_finite(self, rng):
        phases = np.zeros(8)
        phases[3] = np.nan
        with pytest.raises(ValueError):
            apply_diagonal(random_state(3, rng), phases)

    def test_diagonal_gate_rejects_bad_shapes(self):
        with pytest.raises(ShapeError):
            Diagonal(np.zeros(6))
        with pytest.raises(ShapeError):
            Diagonal(np.zeros((2, 2)))


def test_gate_battery_passes_under_each_backend(backend, rng):
    state = random_state(5, rng)
    for op in _sample_ops(5, rng):
        vec = state.amps.copy()
        apply_gate(state, op)
        np.testing.assert_allclose(
            state.amps, dense_gate_matrix(op, 5) @ vec, atol=1e-12
        )
    assert abs(state.norm() - 1.0) < 1e-12
