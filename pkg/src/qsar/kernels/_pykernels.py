"""Pure NumPy gate kernels (fallback backend).

Every function mutates ``amps`` in place. ``amps`` is a contiguous 1-D
complex128 array of length 2**n; qubit 0 is the least-significant bit of
the amplitude index. Argument validation happens one layer up in
``qsar.qsim`` — the kernels assume well-formed input.
"""

import cmath

import numpy as np

BACKEND_NAME = "python"

_RSQRT2 = 1.0 / np.sqrt(2.0)


def hadamard(amps, target):
    v = amps.reshape(-1, 2, 1 << target)
    a = v[:, 0, :]
    b = v[:, 1, :]
    s = (a + b) * _RSQRT2
    v[:, 1, :] = (a - b) * _RSQRT2
    v[:, 0, :] = s


def phase(amps, target, theta):
    v = amps.reshape(-1, 2, 1 << target)
    v[:, 1, :] *= cmath.exp(1j * theta)


def cphase(amps, control, target, theta):
    hi, lo = (control, target) if control > target else (target, control)
    v = amps.reshape(-1, 2, 1 << (hi - lo - 1), 2, 1 << lo)
    v[:, 1, :, 1, :] *= cmath.exp(1j * theta)


def swap(amps, a, b):
    hi, lo = (a, b) if a > b else (b, a)
    v = amps.reshape(-1, 2, 1 << (hi - lo - 1), 2, 1 << lo)
    t = v[:, 1, :, 0, :].copy()
    v[:, 1, :, 0, :] = v[:, 0, :, 1, :]
    v[:, 0, :, 1, :] = t


def diagonal(amps, phases):
    amps *= np.exp(1j * phases)
