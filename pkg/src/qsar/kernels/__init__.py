"""Gate-kernel backend selection.

The compiled Cython kernels are preferred when the extension was built;
otherwise the NumPy fallback is used. ``use_backend`` switches explicitly —
the benchmark and the cross-backend tests rely on it.
"""

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built; pure-Python install
    _ckernels = None

_active = _ckernels if _ckernels is not None else _pykernels


def available_backends():
    """Return a name -> module mapping of every importable backend."""
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["c"] = _ckernels
    return backends


def active_backend():
    """Name of the backend currently dispatching gate kernels."""
    return _active.BACKEND_NAME


def use_backend(name):
    """Select the active backend by name; returns the previous name."""
    global _active
    backends = available_backends()
    if name not in backends:
        raise ValueError(f"unknown or unavailable kernel backend: {name!r}")
    previous = _active.BACKEND_NAME
    _active = backends[name]
    return previous


def hadamard(amps, target):
    _active.hadamard(amps, target)


def phase(amps, target, theta):
    _active.phase(amps, target, theta)


def cphase(amps, control, target, theta):
    _active.cphase(amps, control, target, theta)


def swap(amps, a, b):
    _active.swap(amps, a, b)


def diagonal(amps, phases):
    _active.diagonal(amps, phases)
