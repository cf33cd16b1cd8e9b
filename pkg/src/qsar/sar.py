"""SAR signal model: radar parameters, synthetic point-target raw data, and
the three range-doppler filters (range reference, RCMC phase grid, azimuth
matched filter).

Geometry is the usual stop-and-go model with a hyperbolic range history
R(eta) = sqrt(Rt**2 + (V*(eta - eta_c))**2), a rectangular chirp envelope,
no antenna pattern, and azimuth carrier phase exp(-4j*pi*R/lambda).

Matrices are (n_range, n_azimuth): rows are fast-time samples, columns are
pulses. The fast-time window is anchored so a target at the reference
range peaks at range bin n_range//4 after compression; azimuth time is
centered, eta = (j - n_azimuth//2) / prf.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    EvanescentDopplerError,
    FilterWindowError,
    ShapeError,
    TargetBoundsError,
)

SPEED_OF_LIGHT = 299792458.0

# Domain tags carried by ComplexMatrix through the processing chain.
TIME_TIME = "time-time"
RANGEFREQ_TIME = "rangefreq-time"
TIME_DOPPLERFREQ = "time-dopplerfreq"
RANGEFREQ_DOPPLERFREQ = "rangefreq-dopplerfreq"

_DOMAIN_TAGS = frozenset(
    {TIME_TIME, RANGEFREQ_TIME, TIME_DOPPLERFREQ, RANGEFREQ_DOPPLERFREQ}
)

_PARAM_FIELDS = (
    "wavelength",
    "chirp_rate",
    "pulse_duration",
    "range_sample_rate",
    "prf",
    "velocity",
    "reference_range",
    "c",
)


@dataclass(frozen=True)
class SarParams:
    """Strictly positive acquisition parameters.

    Construction validates that the Doppler compression factor stays real
    over the sampled band |f_eta| <= prf/2.
    """

    wavelength: float
    chirp_rate: float
    pulse_duration: float
    range_sample_rate: float
    prf: float
    velocity: float
    reference_range: float
    c: float = SPEED_OF_LIGHT

    def __post_init__(self):
        for name in _PARAM_FIELDS:
            value = float(getattr(self, name))
            if not np.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be finite and > 0, got {value!r}")
            object.__setattr__(self, name, value)
        edge = self.wavelength * (self.prf / 2.0) / (2.0 * self.velocity)
        if edge * edge >= 1.0:
            raise EvanescentDopplerError(
                "doppler factor is not real at the band edge: "
                f"(wavelength*prf/2 / (2*velocity))^2 = {edge * edge:.6g} >= 1"
            )


@dataclass(frozen=True)
class PointTarget:
    range_offset: float
    azimuth_time: float
    reflectivity: complex = 1.0 + 0.0j


@dataclass
class ComplexMatrix:
    """2-D complex data plus the processing domain it currently lives in."""

    data: np.ndarray
    domain_tag: str = TIME_TIME

    def __post_init__(self):
        arr = np.ascontiguousarray(self.data, dtype=np.complex128)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeError(f"expected a 2-D matrix, got shape {arr.shape}")
        if self.domain_tag not in _DOMAIN_TAGS:
            raise ValueError(f"unknown domain tag {self.domain_tag!r}")
        self.data = arr

    @property
    def n_range(self):
        return self.data.shape[0]

    @property
    def n_azimuth(self):
        return self.data.shape[1]

    def copy(self):
        return ComplexMatrix(self.data.copy(), self.domain_tag)


# --- transforms -------------------------------------------------------------


def forward_transform(x, axis):
    """Unitary DFT with the positive exponent along ``axis``."""
    return np.fft.ifft(x, axis=axis, norm="ortho")


def inverse_transform(x, axis):
    """Inverse of :func:`forward_transform` (negative exponent, unitary)."""
    return np.fft.fft(x, axis=axis, norm="ortho")


def frequency_grid(n, sample_rate):
    """Physical frequency of each transform bin, DC first.

    Under the positive-exponent forward transform a tone exp(+2j*pi*f0*t)
    lands in the bin whose nominal fftfreq label is -f0, so the physical
    axis is the negated fftfreq grid.
    """
    return -np.fft.fftfreq(n, d=1.0 / sample_rate)


# --- axes and window helpers -------------------------------------------------


def range_window_start(params, n_range):
    """Fast time of range sample 0.

    Anchored so a target at the reference range compresses to bin
    ``n_range//4``, leaving headroom for migration and the chirp extent.
    """
    return 2.0 * params.reference_range / params.c - (n_range // 4) / params.range_sample_rate


def fast_time_axis(params, n_range):
    return range_window_start(params, n_range) + np.arange(n_range) / params.range_sample_rate


def azimuth_time_axis(params, n_azimuth):
    return (np.arange(n_azimuth) - n_azimuth // 2) / params.prf


def expected_peak_bins(params, target, n_range, n_azimuth):
    """(range_bin, azimuth_bin) where a focused target should land."""
    range_bin = n_range // 4 + target.range_offset * 2.0 * params.range_sample_rate / params.c
    azimuth_bin = n_azimuth // 2 + target.azimuth_time * params.prf
    return int(round(range_bin)), int(round(azimuth_bin))


def _require_power_of_two(n, label):
    if n < 1 or n & (n - 1):
        raise ShapeError(f"{label} dimension {n} is not a power of 2")


# --- synthetic raw data ------------------------------------------------------


def simulate_raw(params, targets, n_range, n_azimuth):
    """Point-target raw echo matrix in the time-time domain.

    Each target contributes, for every pulse, a delayed chirp
    ``rect * exp(1j*pi*Kr*(t'-Tp/2)**2) * exp(-4j*pi*R(eta)/wavelength)``
    with t' = tau - 2*R(eta)/c. Raises TargetBoundsError if any echo
    (including its migration excursion) leaves the sampled range window.
    """
    _require_power_of_two(n_range, "range")
    _require_power_of_two(n_azimuth, "azimuth")
    tau = fast_time_axis(params, n_range)[:, None]
    eta = azimuth_time_axis(params, n_azimuth)[None, :]
    tau_start = range_window_start(params, n_range)
    fs = params.range_sample_rate
    data = np.zeros((n_range, n_azimuth), dtype=np.complex128)
    for idx, tgt in enumerate(targets):
        rt = params.reference_range + tgt.range_offset
        if rt <= 0.0:
            raise ValueError(
                f"target {idx}: range offset {tgt.range_offset} puts it behind the radar"
            )
        r_eta = np.hypot(rt, params.velocity * (eta - tgt.azimuth_time))
        tau_d = 2.0 * r_eta / params.c
        start = (tau_d - tau_start) * fs
        if start.min() < -1e-9 or (start + params.pulse_duration * fs).max() > n_range + 1e-9:
            raise TargetBoundsError(
                f"target {idx}: echo spans samples "
                f"[{start.min():.3f}, {(start + params.pulse_duration * fs).max():.3f}] "
                f"outside the {n_range}-sample range window"
            )
        dt = tau - tau_d
        envelope = (dt >= 0.0) & (dt < params.pulse_duration)
        phase = (
            np.pi * params.chirp_rate * (dt - params.pulse_duration / 2.0) ** 2
            - 4.0 * np.pi * r_eta / params.wavelength
        )
        data += tgt.reflectivity * envelope * np.exp(1j * phase)
    return ComplexMatrix(data, TIME_TIME)


# --- filters -----------------------------------------------------------------


def range_reference(params, n_range):
    """Conjugate spectrum of the zero-padded chirp replica (length n_range).

    Multiplying the range spectrum by this and transforming back realizes
    circular matched filtering, peaking at the echo start bin.
    """
    fs = params.range_sample_rate
    n_chirp = int(round(params.pulse_duration * fs))
    if n_chirp > n_range:
        raise FilterWindowError(
            f"chirp covers {n_chirp} samples but the range window has only {n_range}"
        )
    if n_chirp < 1:
        raise FilterWindowError(
            f"chirp shorter than one range sample (pulse_duration*fs = "
            f"{params.pulse_duration * fs:.3g})"
        )
    t = np.arange(n_chirp) / fs
    replica = np.exp(1j * np.pi * params.chirp_rate * (t - params.pulse_duration / 2.0) ** 2)
    padded = np.zeros(n_range, dtype=np.complex128)
    padded[:n_chirp] = replica
    return np.conj(forward_transform(padded, axis=0))


def doppler_factor(f_eta, params):
    """D(f_eta) = sqrt(1 - (wavelength*f_eta / (2*velocity))**2)."""
    f = np.asarray(f_eta, dtype=np.float64)
    x = (params.wavelength * f / (2.0 * params.velocity)) ** 2
    if np.any(x >= 1.0):
        raise EvanescentDopplerError(
            f"doppler factor undefined: (wavelength*f_eta/(2*velocity))^2 reaches {x.max():.6g}"
        )
    out = np.sqrt(1.0 - x)
    return float(out) if np.isscalar(f_eta) else out


def rcmc_filter(params, n_range, n_azimuth):
    """Phase grid Theta[k, a] for range cell migration correction.

    Theta = (4*pi*f_r/c) * R0 * (1/D(f_eta) - 1); applying exp(1j*Theta)
    in the (range-frequency, doppler) domain advances each doppler column
    by its migration delay. Rank 1 by construction (outer product).
    """
    f_r = frequency_grid(n_range, params.range_sample_rate)
    f_eta = frequency_grid(n_azimuth, params.prf)
    d = doppler_factor(f_eta, params)
    migration = params.reference_range * (1.0 / d - 1.0)
    return np.outer(4.0 * np.pi * f_r / params.c, migration)


def azimuth_filter(params, n_azimuth):
    """Unit-modulus azimuth matched filter exp(+4j*pi*R0*D(f_eta)/wavelength)."""
    d = doppler_factor(frequency_grid(n_azimuth, params.prf), params)
    return np.exp(4j * np.pi * params.reference_range * d / params.wavelength)


# --- desk-scale defaults and parameter files ----------------------------------


def default_params(n_range=64):
    """Desk-scale parameter set sized to the range window.

    Chosen so a 64x64 single-target scene shows ~3.3 range bins of
    migration across the aperture, the azimuth response compresses to
    under two bins at half maximum, and the Doppler band stays well
    inside the real domain of the compression factor. The chirp occupies
    n_range//4 samples and sweeps half the sampling bandwidth.
    """
    if n_range < 4:
        raise ValueError(f"n_range must be at least 4, got {n_range}")
    fs = 3.2e9
    pulse = (n_range // 4) / fs
    return SarParams(
        wavelength=0.055,
        chirp_rate=(fs / 2.0) / pulse,
        pulse_duration=pulse,
        range_sample_rate=fs,
        prf=440.0,
        velocity=7100.0,
        reference_range=850e3,
    )


def load_params(path):
    """Read SarParams from a flat key=value text file ('#' starts a comment)."""
    values = {}
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, raw = line.partition("=")
            key = key.strip()
            if key not in _PARAM_FIELDS:
                raise ValueError(f"{path}:{lineno}: unknown parameter {key!r}")
            if key in values:
                raise ValueError(f"{path}:{lineno}: duplicate parameter {key!r}")
            values[key] = float(raw.strip())
    missing = [k for k in _PARAM_FIELDS if k != "c" and k not in values]
    if missing:
        raise ValueError(f"{path}: missing parameters: {', '.join(missing)}")
    return SarParams(**values)


def store_params(params, path):
    with open(path, "w", encoding="ascii") as fh:
        for key in _PARAM_FIELDS:
            fh.write(f"{key}={getattr(params, key):.17g}\n")


def load_targets(path):
    """Read point targets from CSV lines: range_offset,azimuth_time,re[,im]."""
    targets = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) not in (3, 4):
                raise ValueError(
                    f"{path}:{lineno}: expected range_offset,azimuth_time,re[,im]"
                )
            offset, eta_c, re = (float(p) for p in parts[:3])
            im = float(parts[3]) if len(parts) == 4 else 0.0
            targets.append(PointTarget(offset, eta_c, complex(re, im)))
    if not targets:
        raise ValueError(f"{path}: no targets found")
    return targets
