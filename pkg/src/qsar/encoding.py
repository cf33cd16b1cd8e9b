"""Amplitude encoding between 2-D complex matrices and register states.

Row-major embedding: ``matrix[k, a]`` becomes amplitude ``k * N_a + a``,
so each range row occupies one contiguous block of amplitudes (azimuth in
the low qubits, range in the high qubits). The L2 norm of the matrix is
divided out to make a unit state and carried classically in
``norm_factor`` so :func:`decode` restores physical values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DegenerateInputError, ShapeError
from .qsim import MAX_QUBITS, StateVector


def _qubits_for(dim, label):
    if dim < 1 or dim & (dim - 1):
        raise ShapeError(f"{label} dimension {dim} is not a power of 2")
    return dim.bit_length() - 1


@dataclass
class EncodedState:
    state: StateVector
    norm_factor: float
    n_range: int
    n_azimuth: int


def flat_index(k, a, n_azimuth, n_range=None):
    """Amplitude index of matrix cell (k, a); inverse of the decode reshape."""
    if a < 0 or a >= n_azimuth:
        raise IndexError(f"azimuth index {a} out of range for width {n_azimuth}")
    if k < 0 or (n_range is not None and k >= n_range):
        raise IndexError(f"range index {k} out of range for height {n_range}")
    return k * n_azimuth + a


def encode(matrix):
    """Normalize a 2-D complex matrix into a register state."""
    shape = np.shape(matrix)
    if len(shape) != 2:
        raise ShapeError(f"expected a 2-D matrix, got shape {shape}")
    n_range, n_azimuth = shape
    n_qubits = _qubits_for(n_range, "range") + _qubits_for(n_azimuth, "azimuth")
    if n_qubits > MAX_QUBITS:
        raise CapacityError(
            f"{n_range}x{n_azimuth} matrix needs {n_qubits} qubits, cap is {MAX_QUBITS}"
        )
    if n_qubits < 1:
        raise ShapeError("a 1x1 matrix has no qubits to encode into")
    arr = np.ascontiguousarray(matrix, dtype=np.complex128)
    if not np.isfinite(arr.view(np.float64)).all():
        raise ValueError("matrix entries must all be finite")
    norm = float(np.linalg.norm(arr))
    if norm == 0.0:
        raise DegenerateInputError("all-zero matrix cannot be normalized into a state")
    state = StateVector(n_qubits, (arr / norm).ravel(), copy=False)
    return EncodedState(state, norm, n_range, n_azimuth)


def decode(encoded):
    """Rebuild the physical matrix from the state and its norm factor."""
    state = encoded.state
    expected = encoded.n_range * encoded.n_azimuth
    if state.amps.shape[0] != expected:
        raise ShapeError(
            f"state length {state.amps.shape[0]} does not match "
            f"{encoded.n_range}x{encoded.n_azimuth}"
        )
    return encoded.norm_factor * state.amps.reshape(encoded.n_range, encoded.n_azimuth)
