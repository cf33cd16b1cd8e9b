"""Cross-backend agreement between the compiled and NumPy gate kernels."""

import numpy as np
import pytest

from conftest import random_unit_vector
from qsar import kernels


def _battery(mod, vec, phases):
    out = vec.copy()
    mod.hadamard(out, 0)
    mod.hadamard(out, 4)
    mod.phase(out, 2, 0.7)
    mod.cphase(out, 1, 4, -1.3)
    mod.cphase(out, 3, 0, 2.1)
    mod.swap(out, 0, 3)
    mod.swap(out, 4, 1)
    mod.diagonal(out, phases)
    return out


def test_backend_registry_always_has_python():
    assert "python" in kernels.available_backends()


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_use_backend_round_trip():
    original = kernels.active_backend()
    previous = kernels.use_backend("python")
    assert previous == original
    assert kernels.active_backend() == "python"
    kernels.use_backend(original)
    assert kernels.active_backend() == original


def test_backends_agree_elementwise():
    backends = kernels.available_backends()
    if len(backends) < 2:
        pytest.skip("compiled kernels not built")
    rng = np.random.default_rng(4321)
    for trial in range(10):
        vec = random_unit_vector(32, rng)
        phases = rng.uniform(-np.pi, np.pi, 32)
        results = {name: _battery(mod, vec, phases) for name, mod in backends.items()}
        np.testing.assert_allclose(results["c"], results["python"], atol=1e-14)


def test_dispatch_uses_active_backend(backend, rng):
    vec = random_unit_vector(8, rng)
    via_dispatch = vec.copy()
    kernels.hadamard(via_dispatch, 1)
    direct = vec.copy()
    kernels.available_backends()[backend].hadamard(direct, 1)
    np.testing.assert_array_equal(via_dispatch, direct)
