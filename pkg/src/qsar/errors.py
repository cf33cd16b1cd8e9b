"""Exception types shared across the package."""


class CapacityError(ValueError):
    """Register size outside the supported qubit range."""


class ShapeError(ValueError):
    """Array or register dimensions inconsistent with the operation."""


class DegenerateInputError(ValueError):
    """Input carries no usable content (e.g. an all-zero matrix cannot be normalized)."""


class EvanescentDopplerError(ValueError):
    """Doppler frequency outside the real-valued domain of the compression factor."""


class FilterWindowError(ValueError):
    """Chirp replica does not fit the configured range window."""


class PipelineOrderError(RuntimeError):
    """Operation applied to data that is in the wrong processing domain."""


class NonUnitaryFilterError(ValueError):
    """Filter with non-unit modulus cannot be realized as a diagonal phase gate."""


class TargetBoundsError(ValueError):
    """Simulated target echo leaves the sampled range window."""


class MatrixFormatError(ValueError):
    """Matrix file is malformed; ``byte_offset`` locates the problem."""

    def __init__(self, message, byte_offset=None):
        if byte_offset is not None:
            message = f"{message} (byte offset {byte_offset})"
        super().__init__(message)
        self.byte_offset = byte_offset
