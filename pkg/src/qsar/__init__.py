"""Quantum-assisted SAR range-doppler processing testbed.

A dense state-vector simulator (QFT circuits plus diagonal phase gates)
embedded in a classical range-doppler focusing chain, so classical,
hybrid, and fully gate-based pipelines can be compared elementwise at
desk scale.
"""

from .encoding import EncodedState, decode, encode, flat_index
from .errors import (
    CapacityError,
    DegenerateInputError,
    EvanescentDopplerError,
    FilterWindowError,
    MatrixFormatError,
    NonUnitaryFilterError,
    PipelineOrderError,
    ShapeError,
    TargetBoundsError,
)
from .qft import (
    GateCounts,
    QftSpec,
    apply_qft_to_subset,
    build_qft,
    census,
    dft_oracle,
    gate_count,
)
from .qsim import (
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
from .rda import (
    BLOCK_PER_RANGE_LINE,
    FULL_GRID,
    ComparisonReport,
    RcmcGateSpec,
    apply_rcmc_classical,
    apply_rcmc_quantum,
    azimuth_compress,
    azimuth_fft,
    azimuth_ifft,
    build_u_rcmc,
    compare,
    peak_bin,
    range_compress,
    run_classical,
    run_hybrid,
    run_qrda,
    wrap_phase,
)
from .sar import (
    RANGEFREQ_DOPPLERFREQ,
    RANGEFREQ_TIME,
    SPEED_OF_LIGHT,
    TIME_DOPPLERFREQ,
    TIME_TIME,
    ComplexMatrix,
    PointTarget,
    SarParams,
    azimuth_filter,
    default_params,
    doppler_factor,
    expected_peak_bins,
    forward_transform,
    frequency_grid,
    inverse_transform,
    range_reference,
    rcmc_filter,
    simulate_raw,
)

__version__ = "0.1.0"
