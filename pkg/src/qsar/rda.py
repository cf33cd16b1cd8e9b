"""Range-doppler focusing pipelines and the quantum/classical comparison.

Three routes produce the same image from raw data:

* :func:`run_classical` — NumPy transforms and elementwise filters.
* :func:`run_hybrid` — classical chain, but the RCMC multiply runs as a
  diagonal gate on an amplitude-encoded register.
* :func:`run_qrda` — everything after encoding happens on the register:
  subset QFTs replace the classical transforms and all filters are
  diagonal phase gates (which forces a phase-only range reference).

Every pipeline accepts ``probe``, a callable ``(stage, domain_tag, norm)``
invoked after each stage with the Frobenius norm of the working matrix or
the L2 norm of the register state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .encoding import decode, encode
from .errors import NonUnitaryFilterError, PipelineOrderError, ShapeError
from .qft import apply_qft_to_subset
from .qsim import Diagonal, apply_diagonal
from .sar import (
    RANGEFREQ_DOPPLERFREQ,
    RANGEFREQ_TIME,
    TIME_DOPPLERFREQ,
    TIME_TIME,
    ComplexMatrix,
    azimuth_filter,
    forward_transform,
    inverse_transform,
    range_reference,
    rcmc_filter,
)

BLOCK_PER_RANGE_LINE = "block_per_range_line"
FULL_GRID = "full_grid"


@dataclass
class RcmcGateSpec:
    """Phase layout for the diagonal RCMC gate.

    ``block_per_range_line`` carries one angle per range line, replicated
    across that line's azimuth block; ``full_grid`` carries one angle per
    (range, azimuth) cell.
    """

    mode: str
    phases: np.ndarray
    n_range: int
    n_azimuth: int

    def __post_init__(self):
        if self.mode not in (BLOCK_PER_RANGE_LINE, FULL_GRID):
            raise ValueError(f"unknown RCMC gate mode {self.mode!r}")
        arr = np.ascontiguousarray(self.phases, dtype=np.float64)
        expected = (self.n_range,) if self.mode == BLOCK_PER_RANGE_LINE else (
            self.n_range,
            self.n_azimuth,
        )
        if arr.shape != expected:
            raise ShapeError(
                f"{self.mode} phases must have shape {expected}, got {arr.shape}"
            )
        if not np.isfinite(arr).all():
            raise ValueError("RCMC phases must all be finite")
        self.phases = arr


def build_u_rcmc(spec):
    """Diagonal gate over the flat (range * azimuth) amplitude index."""
    if spec.mode == BLOCK_PER_RANGE_LINE:
        flat = np.repeat(spec.phases, spec.n_azimuth)
    else:
        flat = spec.phases.ravel()
    return Diagonal(flat)


# --- comparison ---------------------------------------------------------------


def wrap_phase(x):
    """Wrap angles to (-pi, pi]."""
    return np.angle(np.exp(1j * np.asarray(x, dtype=np.float64)))


@dataclass
class ComparisonReport:
    max_abs_phase_diff: float
    mean_abs_phase_diff: float
    max_abs_magnitude_rel_diff: float
    phase_diff_matrix: np.ndarray
    zero_magnitude_cells: int


def _matrix_data(m):
    return m.data if isinstance(m, ComplexMatrix) else np.asarray(m, dtype=np.complex128)


def compare(a, b):
    """Elementwise phase/magnitude comparison of two equal-shape matrices.

    Cells where either magnitude is exactly zero contribute zero phase
    difference and are counted in ``zero_magnitude_cells``.
    """
    da, db = _matrix_data(a), _matrix_data(b)
    if da.shape != db.shape:
        raise ShapeError(f"shape mismatch: {da.shape} vs {db.shape}")
    mag_a, mag_b = np.abs(da), np.abs(db)
    zero = (mag_a == 0.0) | (mag_b == 0.0)
    diff = wrap_phase(np.angle(da) - np.angle(db))
    diff[zero] = 0.0
    denom = np.maximum(mag_a, mag_b)
    rel = np.zeros_like(denom)
    np.divide(np.abs(mag_a - mag_b), denom, out=rel, where=denom > 0.0)
    return ComparisonReport(
        max_abs_phase_diff=float(np.abs(diff).max()),
        mean_abs_phase_diff=float(np.abs(diff).mean()),
        max_abs_magnitude_rel_diff=float(rel.max()),
        phase_diff_matrix=diff,
        zero_magnitude_cells=int(zero.sum()),
    )


def peak_bin(m):
    """(range_bin, azimuth_bin) of the magnitude maximum."""
    data = _matrix_data(m)
    return tuple(int(i) for i in np.unravel_index(np.argmax(np.abs(data)), data.shape))


# --- classical stages -----------------------------------------------------------


def _require_tag(m, tag, op):
    if m.domain_tag != tag:
        raise PipelineOrderError(f"{op} expects {tag!r} input, got {m.domain_tag!r}")


def _phase_only(g):
    """Strip magnitude from a spectral filter, keeping unit modulus."""
    mag = np.abs(g)
    out = np.ones_like(g)
    np.divide(g, mag, out=out, where=mag > 0.0)
    return out


def range_compress(raw, params, phase_only_range_ref=False):
    """Matched-filter every pulse against the chirp replica (circularly)."""
    _require_tag(raw, TIME_TIME, "range_compress")
    g = range_reference(params, raw.n_range)
    if phase_only_range_ref:
        g = _phase_only(g)
    spectrum = forward_transform(raw.data, axis=0) * g[:, None]
    return ComplexMatrix(inverse_transform(spectrum, axis=0), TIME_TIME)


def azimuth_fft(src):
    _require_tag(src, TIME_TIME, "azimuth_fft")
    return ComplexMatrix(forward_transform(src.data, axis=1), TIME_DOPPLERFREQ)


def azimuth_ifft(src):
    _require_tag(src, TIME_DOPPLERFREQ, "azimuth_ifft")
    return ComplexMatrix(inverse_transform(src.data, axis=1), TIME_TIME)


def apply_rcmc_classical(src, params):
    """exp(1j*Theta) multiply in the (range-frequency, doppler) domain."""
    _require_tag(src, TIME_DOPPLERFREQ, "apply_rcmc_classical")
    theta = rcmc_filter(params, src.n_range, src.n_azimuth)
    spectrum = forward_transform(src.data, axis=0)
    spectrum *= np.exp(1j * theta)
    return ComplexMatrix(inverse_transform(spectrum, axis=0), TIME_DOPPLERFREQ)


def apply_rcmc_quantum(src, params, probe=None):
    """Same correction, but the multiply is a diagonal gate on a register."""
    _require_tag(src, TIME_DOPPLERFREQ, "apply_rcmc_quantum")
    spectrum = forward_transform(src.data, axis=0)
    encoded = encode(spectrum)
    theta = rcmc_filter(params, src.n_range, src.n_azimuth)
    gate = build_u_rcmc(RcmcGateSpec(FULL_GRID, theta, src.n_range, src.n_azimuth))
    apply_diagonal(encoded.state, gate.phases)
    if probe is not None:
        probe("rcmc_gate", RANGEFREQ_DOPPLERFREQ, encoded.state.norm())
    corrected = decode(encoded)
    return ComplexMatrix(inverse_transform(corrected, axis=0), TIME_DOPPLERFREQ)


def azimuth_compress(src, params):
    """Apply the azimuth matched filter and return to the image domain."""
    _require_tag(src, TIME_DOPPLERFREQ, "azimuth_compress")
    h = azimuth_filter(params, src.n_azimuth)
    return ComplexMatrix(inverse_transform(src.data * h[None, :], axis=1), TIME_TIME)


# --- pipelines -------------------------------------------------------------------


def _matrix_probe(probe, stage, m):
    if probe is not None:
        probe(stage, m.domain_tag, float(np.linalg.norm(m.data)))


def run_classical(raw, params, phase_only_range_ref=False, rcmc_enabled=True, probe=None):
    """Classical range-doppler chain; ``rcmc_enabled=False`` skips correction."""
    m = range_compress(raw, params, phase_only_range_ref=phase_only_range_ref)
    _matrix_probe(probe, "range_compress", m)
    m = azimuth_fft(m)
    _matrix_probe(probe, "azimuth_fft", m)
    if rcmc_enabled:
        m = apply_rcmc_classical(m, params)
        _matrix_probe(probe, "rcmc", m)
    m = azimuth_compress(m, params)
    _matrix_probe(probe, "azimuth_compress", m)
    return m


def run_hybrid(raw, params, phase_only_range_ref=False, probe=None):
    """Classical chain with the RCMC multiply routed through the register."""
    m = range_compress(raw, params, phase_only_range_ref=phase_only_range_ref)
    _matrix_probe(probe, "range_compress", m)
    m = azimuth_fft(m)
    _matrix_probe(probe, "azimuth_fft", m)
    m = apply_rcmc_quantum(m, params, probe=probe)
    _matrix_probe(probe, "rcmc", m)
    m = azimuth_compress(m, params)
    _matrix_probe(probe, "azimuth_compress", m)
    return m


def _state_probe(probe, stage, tag, state):
    if probe is not None:
        probe(stage, tag, state.norm())


def _run_qrda_gates(data, g_phases, theta, h_phases, probe=None):
    """Gate-level pipeline on already-validated arrays; returns the image array.

    Kept separate from :func:`run_qrda` so the QFT/IQFT plumbing can be
    exercised with arbitrary (e.g. all-zero) filter phases.
    """
    n_range, n_azimuth = data.shape
    bits_azimuth = (n_azimuth - 1).bit_length() if n_azimuth > 1 else 0
    bits_range = (n_range - 1).bit_length() if n_range > 1 else 0
    range_qubits = list(range(bits_azimuth, bits_azimuth + bits_range))
    azimuth_qubits = list(range(bits_azimuth))

    encoded = encode(data)
    state = encoded.state
    _state_probe(probe, "encode", TIME_TIME, state)

    apply_qft_to_subset(state, range_qubits)
    _state_probe(probe, "range_qft", RANGEFREQ_TIME, state)
    apply_diagonal(state, np.repeat(g_phases, n_azimuth))
    _state_probe(probe, "range_reference_gate", RANGEFREQ_TIME, state)
    apply_qft_to_subset(state, range_qubits, inverse=True)
    _state_probe(probe, "range_iqft", TIME_TIME, state)

    apply_qft_to_subset(state, azimuth_qubits)
    _state_probe(probe, "azimuth_qft", TIME_DOPPLERFREQ, state)

    apply_qft_to_subset(state, range_qubits)
    _state_probe(probe, "rcmc_range_qft", RANGEFREQ_DOPPLERFREQ, state)
    apply_diagonal(state, theta.ravel())
    _state_probe(probe, "rcmc_gate", RANGEFREQ_DOPPLERFREQ, state)
    apply_qft_to_subset(state, range_qubits, inverse=True)
    _state_probe(probe, "rcmc_range_iqft", TIME_DOPPLERFREQ, state)

    apply_diagonal(state, np.tile(h_phases, n_range))
    _state_probe(probe, "azimuth_filter_gate", TIME_DOPPLERFREQ, state)
    apply_qft_to_subset(state, azimuth_qubits, inverse=True)
    _state_probe(probe, "azimuth_iqft", TIME_TIME, state)

    image = decode(encoded)
    _state_probe(probe, "decode", TIME_TIME, state)
    return image


def run_qrda(raw, params, phase_only_range_ref=False, probe=None):
    """Fully gate-based chain: encode once, QFT subsets, diagonal filters.

    The range reference must be requested phase-only: its matched-filter
    magnitude is not unit-modulus and therefore cannot be a diagonal
    phase gate.
    """
    _require_tag(raw, TIME_TIME, "run_qrda")
    if raw.n_range < 2 or raw.n_azimuth < 2:
        raise ShapeError("run_qrda needs at least 2 bins along each axis")
    if not phase_only_range_ref:
        raise NonUnitaryFilterError(
            "the matched range reference has non-unit modulus and cannot be a "
            "diagonal gate; pass phase_only_range_ref=True"
        )
    g_phases = np.angle(_phase_only(range_reference(params, raw.n_range)))
    theta = rcmc_filter(params, raw.n_range, raw.n_azimuth)
    h_phases = np.angle(azimuth_filter(params, raw.n_azimuth))
    image = _run_qrda_gates(raw.data, g_phases, theta, h_phases, probe=probe)
    return ComplexMatrix(image, TIME_TIME)
