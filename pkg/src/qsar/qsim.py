"""Dense state-vector register and the gate set acting on it.

Gates update the amplitude buffer in place through strided kernels; no
2**n x 2**n matrix is ever materialized. Qubit 0 is the least-significant
bit of the amplitude index, so basis state ``|i>`` is ``amps[i]``.

All ``apply_*`` functions mutate their ``state`` argument and return it so
calls can be chained; use :meth:`StateVector.copy` to keep the original.
A single StateVector must not be mutated from several threads at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import CapacityError, ShapeError

MAX_QUBITS = 24


class StateVector:
    """Amplitudes of an ``n_qubits``-qubit register (2**n complex128 values)."""

    __slots__ = ("n_qubits", "amps")

    def __init__(self, n_qubits, amps, copy=True):
        if not isinstance(n_qubits, (int, np.integer)) or not 1 <= n_qubits <= MAX_QUBITS:
            raise CapacityError(
                f"n_qubits must be an integer in 1..{MAX_QUBITS}, got {n_qubits!r}"
            )
        arr = np.array(amps, dtype=np.complex128, copy=copy, order="C")
        if arr.ndim != 1 or arr.shape[0] != (1 << n_qubits):
            raise ShapeError(
                f"amplitude buffer for {n_qubits} qubits must have length "
                f"{1 << n_qubits}, got shape {arr.shape}"
            )
        self.n_qubits = int(n_qubits)
        self.amps = np.ascontiguousarray(arr)

    @classmethod
    def from_vector(cls, vec):
        """Wrap a power-of-2 length vector, inferring the qubit count."""
        arr = np.asarray(vec, dtype=np.complex128)
        if arr.ndim != 1:
            raise ShapeError(f"expected a 1-D vector, got shape {arr.shape}")
        n = arr.shape[0]
        if n < 2 or n & (n - 1):
            raise ShapeError(f"vector length {n} is not a power of 2")
        return cls(n.bit_length() - 1, arr)

    def copy(self):
        return StateVector(self.n_qubits, self.amps, copy=True)

    def norm(self):
        return float(np.linalg.norm(self.amps))

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits}, norm={self.norm():.6f})"


def new_zero_state(n_qubits):
    """Register initialized to ``|0...0>``."""
    if not isinstance(n_qubits, (int, np.integer)) or not 1 <= n_qubits <= MAX_QUBITS:
        raise CapacityError(
            f"n_qubits must be an integer in 1..{MAX_QUBITS}, got {n_qubits!r}"
        )
    amps = np.zeros(1 << n_qubits, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(int(n_qubits), amps, copy=False)


# --- gate descriptions -----------------------------------------------------


@dataclass(frozen=True)
class Hadamard:
    target: int

    def inverse(self):
        return self


@dataclass(frozen=True)
class Phase:
    target: int
    theta: float

    def inverse(self):
        return Phase(self.target, -self.theta)


@dataclass(frozen=True)
class ControlledPhase:
    """Symmetric two-qubit phase: |11> picks up exp(i*theta)."""

    control: int
    target: int
    theta: float

    def inverse(self):
        return ControlledPhase(self.control, self.target, -self.theta)


@dataclass(frozen=True)
class Swap:
    a: int
    b: int

    def inverse(self):
        return self


@dataclass(frozen=True, eq=False)
class Diagonal:
    """Phase-only diagonal gate; stores angles, never the exp values."""

    phases: np.ndarray

    def __post_init__(self):
        arr = np.ascontiguousarray(self.phases, dtype=np.float64)
        if arr.ndim != 1 or arr.size < 2 or arr.size & (arr.size - 1):
            raise ShapeError(
                f"diagonal phase array must be 1-D with power-of-2 length, got shape {arr.shape}"
            )
        if not np.isfinite(arr).all():
            raise ValueError("diagonal phases must all be finite")
        object.__setattr__(self, "phases", arr)

    def inverse(self):
        return Diagonal(-self.phases)


@dataclass
class Circuit:
    """Ordered gate list over a fixed-width register."""

    n_qubits: int
    ops: list = field(default_factory=list)

    def inverse(self):
        return Circuit(self.n_qubits, [op.inverse() for op in reversed(self.ops)])

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)


# --- gate application ------------------------------------------------------


def _check_qubit(state, q, role):
    if not isinstance(q, (int, np.integer)):
        raise IndexError(f"{role} qubit must be an integer, got {q!r}")
    if not 0 <= q < state.n_qubits:
        raise IndexError(
            f"{role} qubit {q} out of range for a {state.n_qubits}-qubit register"
        )


def _check_angle(theta):
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError(f"gate angle must be finite, got {theta!r}")
    return theta


def apply_hadamard(state, target):
    """Hadamard on ``target``; mutates and returns ``state``."""
    _check_qubit(state, target, "target")
    kernels.hadamard(state.amps, int(target))
    return state


def apply_phase(state, target, theta):
    """Phase gate diag(1, exp(i*theta)) on ``target``."""
    _check_qubit(state, target, "target")
    kernels.phase(state.amps, int(target), _check_angle(theta))
    return state


def apply_controlled_phase(state, control, target, theta):
    """Controlled phase: amplitudes with both bits set pick up exp(i*theta)."""
    _check_qubit(state, control, "control")
    _check_qubit(state, target, "target")
    if control == target:
        raise ValueError(f"control and target must differ, both are {control}")
    kernels.cphase(state.amps, int(control), int(target), _check_angle(theta))
    return state


def apply_swap(state, a, b):
    """Exchange qubits ``a`` and ``b``."""
    _check_qubit(state, a, "first")
    _check_qubit(state, b, "second")
    if a == b:
        raise ValueError(f"swap qubits must differ, both are {a}")
    kernels.swap(state.amps, int(a), int(b))
    return state


def apply_diagonal(state, phases):
    """Multiply amplitude ``i`` by ``exp(i*phases[i])``.

    ``phases`` must hold exactly 2**n_qubits finite angles in radians.
    """
    arr = np.ascontiguousarray(phases, dtype=np.float64)
    if arr.ndim != 1 or arr.shape[0] != state.amps.shape[0]:
        raise ShapeError(
            f"diagonal needs {state.amps.shape[0]} phases for a "
            f"{state.n_qubits}-qubit register, got shape {arr.shape}"
        )
    if not np.isfinite(arr).all():
        raise ValueError("diagonal phases must all be finite")
    kernels.diagonal(state.amps, arr)
    return state


def apply_gate(state, op):
    """Dispatch one gate description onto the register."""
    if isinstance(op, Hadamard):
        return apply_hadamard(state, op.target)
    if isinstance(op, Phase):
        return apply_phase(state, op.target, op.theta)
    if isinstance(op, ControlledPhase):
        return apply_controlled_phase(state, op.control, op.target, op.theta)
    if isinstance(op, Swap):
        return apply_swap(state, op.a, op.b)
    if isinstance(op, Diagonal):
        return apply_diagonal(state, op.phases)
    raise TypeError(f"unknown gate op: {op!r}")


def run_circuit(state, circuit):
    """Apply every gate of ``circuit`` in order; mutates and returns ``state``."""
    if circuit.n_qubits != state.n_qubits:
        raise ShapeError(
            f"circuit is for {circuit.n_qubits} qubits, state has {state.n_qubits}"
        )
    for op in circuit.ops:
        apply_gate(state, op)
    return state


def inner_product(a, b):
    """`<a|b>` with the left argument conjugated."""
    if a.n_qubits != b.n_qubits:
        raise ShapeError(
            f"register sizes differ: {a.n_qubits} vs {b.n_qubits} qubits"
        )
    return complex(np.vdot(a.amps, b.amps))
