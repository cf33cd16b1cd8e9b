import numpy as np
import pytest

from qsar import kernels
from qsar.qsim import StateVector


def random_unit_vector(n_amps, rng):
    v = rng.standard_normal(n_amps) + 1j * rng.standard_normal(n_amps)
    return v / np.linalg.norm(v)


def random_state(n_qubits, rng):
    return StateVector(n_qubits, random_unit_vector(1 << n_qubits, rng), copy=False)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    """Run the decorated test once per available kernel backend."""
    previous = kernels.use_backend(request.param)
    yield request.param
    kernels.use_backend(previous)
