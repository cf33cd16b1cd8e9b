"""Matrix file formats and grayscale rendering.

Binary layout (little-endian): magic ``b"QSAR"``, version u16, n_range
u32, n_azimuth u32, then row-major float64 (re, im) pairs. Round-trips
bit-exactly.

Text layout: header line ``QSAR-CSV v1,<n_range>,<n_azimuth>``, then one
line per range row holding 2*n_azimuth comma-separated fields
(re,im,re,im,...) printed with %.17g, which also round-trips float64
exactly.

PGM renderings are 8-bit binary (P5). Magnitude maps peak-normalized dB
clipped to [-60, 0] linearly onto [0, 255] (exact zeros render as 0);
phase maps (-pi, pi] linearly onto [0, 255].
"""

from __future__ import annotations

import struct

import numpy as np

from .errors import MatrixFormatError
from .sar import TIME_TIME, ComplexMatrix

MAGIC = b"QSAR"
BINARY_VERSION = 1
TEXT_HEADER = "QSAR-CSV v1"
_HEADER_STRUCT = struct.Struct("<4sHII")


def _as_array(matrix):
    data = matrix.data if isinstance(matrix, ComplexMatrix) else matrix
    arr = np.ascontiguousarray(data, dtype=np.complex128)
    if arr.ndim != 2:
        raise MatrixFormatError(f"expected a 2-D matrix, got shape {arr.shape}")
    return arr


def store_matrix(matrix, path, fmt=None):
    """Write a matrix; ``fmt`` is "binary", "text", or None to pick by suffix."""
    if fmt is None:
        fmt = "text" if str(path).endswith(".csv") else "binary"
    if fmt == "binary":
        _store_binary(_as_array(matrix), path)
    elif fmt == "text":
        _store_text(_as_array(matrix), path)
    else:
        raise ValueError(f"unknown matrix format {fmt!r}")


def load_matrix(path):
    """Read either format back as a time-time ComplexMatrix (sniffs the header)."""
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob.startswith(TEXT_HEADER.encode("ascii")):
        data = _parse_text(blob, path)
    elif blob.startswith(MAGIC):
        data = _parse_binary(blob, path)
    else:
        raise MatrixFormatError(f"{path}: unrecognized matrix header", byte_offset=0)
    return ComplexMatrix(data, TIME_TIME)


def _store_binary(arr, path):
    n_range, n_azimuth = arr.shape
    interleaved = np.empty((n_range, n_azimuth, 2), dtype="<f8")
    interleaved[..., 0] = arr.real
    interleaved[..., 1] = arr.imag
    with open(path, "wb") as fh:
        fh.write(_HEADER_STRUCT.pack(MAGIC, BINARY_VERSION, n_range, n_azimuth))
        fh.write(interleaved.tobytes())


def _parse_binary(blob, path):
    if len(blob) < _HEADER_STRUCT.size:
        raise MatrixFormatError(
            f"{path}: truncated header ({len(blob)} of {_HEADER_STRUCT.size} bytes)",
            byte_offset=len(blob),
        )
    magic, version, n_range, n_azimuth = _HEADER_STRUCT.unpack_from(blob)
    if magic != MAGIC:
        raise MatrixFormatError(f"{path}: bad magic {magic!r}", byte_offset=0)
    if version != BINARY_VERSION:
        raise MatrixFormatError(f"{path}: unsupported version {version}", byte_offset=4)
    if n_range < 1 or n_azimuth < 1:
        raise MatrixFormatError(
            f"{path}: bad dimensions {n_range}x{n_azimuth}", byte_offset=6
        )
    expected = _HEADER_STRUCT.size + 16 * n_range * n_azimuth
    if len(blob) < expected:
        raise MatrixFormatError(
            f"{path}: truncated payload ({len(blob)} of {expected} bytes)",
            byte_offset=len(blob),
        )
    if len(blob) > expected:
        raise MatrixFormatError(
            f"{path}: {len(blob) - expected} trailing bytes", byte_offset=expected
        )
    flat = np.frombuffer(blob, dtype="<f8", offset=_HEADER_STRUCT.size)
    pairs = flat.reshape(n_range, n_azimuth, 2)
    return np.ascontiguousarray(pairs[..., 0] + 1j * pairs[..., 1])


def _store_text(arr, path):
    n_range, n_azimuth = arr.shape
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(f"{TEXT_HEADER},{n_range},{n_azimuth}\n")
        for row in arr:
            fields = []
            for value in row:
                fields.append(f"{value.real:.17g}")
                fields.append(f"{value.imag:.17g}")
            fh.write(",".join(fields) + "\n")


def _parse_text(blob, path):
    lines = blob.split(b"\n")
    offsets = []
    pos = 0
    for line in lines:
        offsets.append(pos)
        pos += len(line) + 1
    try:
        header = lines[0].decode("ascii")
    except UnicodeDecodeError as exc:
        raise MatrixFormatError(f"{path}: undecodable header", byte_offset=0) from exc
    parts = header.split(",")
    if len(parts) != 3 or parts[0] != TEXT_HEADER:
        raise MatrixFormatError(f"{path}: bad header {header!r}", byte_offset=0)
    try:
        n_range, n_azimuth = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise MatrixFormatError(f"{path}: bad header {header!r}", byte_offset=0) from exc
    if n_range < 1 or n_azimuth < 1:
        raise MatrixFormatError(
            f"{path}: bad dimensions {n_range}x{n_azimuth}", byte_offset=0
        )
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != n_range:
        raise MatrixFormatError(
            f"{path}: expected {n_range} rows, found {len(body)}",
            byte_offset=offsets[min(len(lines) - 1, n_range)],
        )
    data = np.empty((n_range, n_azimuth), dtype=np.complex128)
    row_index = 0
    for line_no, line in enumerate(lines[1:], start=1):
        if not line.strip():
            continue
        fields = line.decode("ascii").split(",")
        if len(fields) != 2 * n_azimuth:
            raise MatrixFormatError(
                f"{path}: row {row_index} has {len(fields)} fields, "
                f"expected {2 * n_azimuth}",
                byte_offset=offsets[line_no],
            )
        try:
            values = np.array([float(f) for f in fields], dtype=np.float64)
        except ValueError as exc:
            raise MatrixFormatError(
                f"{path}: row {row_index}: {exc}", byte_offset=offsets[line_no]
            ) from exc
        data[row_index] = values[0::2] + 1j * values[1::2]
        row_index += 1
    return data


# --- PGM rendering --------------------------------------------------------------


def write_pgm(levels, path):
    """Write a 2-D uint8 array as binary PGM (P5)."""
    arr = np.ascontiguousarray(levels, dtype=np.uint8)
    if arr.ndim != 2:
        raise ValueError(f"PGM needs a 2-D array, got shape {arr.shape}")
    height, width = arr.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{width} {height}\n255\n".encode("ascii"))
        fh.write(arr.tobytes())


def magnitude_levels(matrix):
    """8-bit log-scaled magnitude: dB relative to the peak, floored at -60."""
    mag = np.abs(_as_array(matrix))
    peak = mag.max()
    levels = np.zeros(mag.shape, dtype=np.uint8)
    if peak == 0.0:
        return levels
    nonzero = mag > 0.0
    db = np.full(mag.shape, -60.0)
    db[nonzero] = np.clip(20.0 * np.log10(mag[nonzero] / peak), -60.0, 0.0)
    levels[nonzero] = np.round((db[nonzero] + 60.0) / 60.0 * 255.0).astype(np.uint8)
    return levels


def phase_levels(phases):
    """8-bit linear map of wrapped phase: (-pi, pi] onto [0, 255]."""
    arr = np.asarray(phases, dtype=np.float64)
    return np.round((arr + np.pi) / (2.0 * np.pi) * 255.0).astype(np.uint8)


def store_real_csv(values, path):
    """Plain CSV of a real matrix (one row per range line, %.17g fields)."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {arr.shape}")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for row in arr:
            fh.write(",".join(f"{v:.17g}" for v in row) + "\n")


def random_complex_matrix(n_range, n_azimuth, seed):
    """Seeded standard-normal complex matrix via numpy's default_rng (PCG64)."""
    rng = np.random.default_rng(seed)
    data = rng.standard_normal((n_range, n_azimuth)) + 1j * rng.standard_normal(
        (n_range, n_azimuth)
    )
    return ComplexMatrix(data, TIME_TIME)
