"""Quantum Fourier transform circuits and a brute-force DFT oracle.

Transform convention (shared by every quantum and classical path in this
package): the forward transform uses the positive exponent and unitary
normalization,

    out[k] = (1/sqrt(N)) * sum_x in[x] * exp(+2j*pi*x*k/N).

The circuit for ``n`` qubits uses n Hadamards, n(n-1)/2 controlled phases
with angles 2*pi/2**k, and floor(n/2) final bit-reversal swaps so the
output arrives in natural index order. The inverse is the reversed gate
list with negated angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import ShapeError
from .qsim import Circuit, ControlledPhase, Hadamard, Swap


@dataclass(frozen=True)
class QftSpec:
    n_qubits: int
    inverse: bool = False
    include_bit_reversal_swaps: bool = True

    def __post_init__(self):
        if not isinstance(self.n_qubits, int) or self.n_qubits < 1:
            raise ValueError(f"n_qubits must be a positive integer, got {self.n_qubits!r}")


class GateCounts(NamedTuple):
    hadamard: int
    controlled_phase: int
    swap: int


def build_qft(spec):
    """Gate list realizing the (inverse) QFT described by ``spec``."""
    n = spec.n_qubits
    ops = []
    for t in range(n - 1, -1, -1):
        ops.append(Hadamard(t))
        for m in range(t - 1, -1, -1):
            # Angle 2*pi/2**k between qubits k-1 apart, k = t - m + 1.
            ops.append(ControlledPhase(m, t, 2.0 * math.pi / (1 << (t - m + 1))))
    if spec.include_bit_reversal_swaps:
        for i in range(n // 2):
            ops.append(Swap(i, n - 1 - i))
    circuit = Circuit(n, ops)
    if spec.inverse:
        circuit = circuit.inverse()
    return circuit


def gate_count(spec):
    """Closed-form gate census for :func:`build_qft` of the same spec."""
    n = spec.n_qubits
    swaps = n // 2 if spec.include_bit_reversal_swaps else 0
    return GateCounts(n, n * (n - 1) // 2, swaps)


def census(circuit):
    """Count the QFT gate kinds actually present in ``circuit``."""
    h = cp = sw = 0
    for op in circuit.ops:
        if isinstance(op, Hadamard):
            h += 1
        elif isinstance(op, ControlledPhase):
            cp += 1
        elif isinstance(op, Swap):
            sw += 1
        else:
            raise ValueError(f"unexpected gate kind in QFT circuit: {op!r}")
    return GateCounts(h, cp, sw)


def apply_qft_to_subset(state, qubits, inverse=False):
    """Run the QFT on a subset of register qubits, in place.

    ``qubits[j]`` plays the role of bit ``j`` (least significant) of the
    transformed sub-index; amplitudes over the remaining qubits are acted
    on independently. Returns the mutated ``state``.
    """
    from .qsim import run_circuit  # local import keeps module load order simple

    qubits = [int(q) for q in qubits]
    if len(set(qubits)) != len(qubits):
        raise ValueError(f"subset qubits must be distinct, got {qubits}")
    for q in qubits:
        if not 0 <= q < state.n_qubits:
            raise IndexError(
                f"subset qubit {q} out of range for a {state.n_qubits}-qubit register"
            )
    if not qubits:
        raise ValueError("subset must name at least one qubit")

    template = build_qft(QftSpec(len(qubits), inverse=inverse))
    mapped = []
    for op in template.ops:
        if isinstance(op, Hadamard):
            mapped.append(Hadamard(qubits[op.target]))
        elif isinstance(op, ControlledPhase):
            mapped.append(ControlledPhase(qubits[op.control], qubits[op.target], op.theta))
        else:
            mapped.append(Swap(qubits[op.a], qubits[op.b]))
    return run_circuit(state, Circuit(state.n_qubits, mapped))


def dft_oracle(vec):
    """O(N^2) unitary DFT with the positive exponent, built from scratch.

    Deliberately avoids both the gate kernels and ``np.fft`` so it can
    serve as an independent reference for either route.
    """
    arr = np.asarray(vec, dtype=np.complex128)
    if arr.ndim != 1:
        raise ShapeError(f"expected a 1-D vector, got shape {arr.shape}")
    n = arr.shape[0]
    if n < 2 or n & (n - 1):
        raise ShapeError(f"vector length {n} is not a power of 2")
    idx = np.arange(n)
    w = np.exp(2j * np.pi * np.outer(idx, idx) / n) / math.sqrt(n)
    return w @ arr
