"""Timing comparison of the compiled and pure-NumPy gate kernels.

Runs a full QFT (with bit-reversal swaps) and a register-wide diagonal
gate on random states of increasing size, once per available backend,
and prints a table with the speed ratio.

Usage: python benchmarks/bench_kernels.py [--min-n 10] [--max-n 18] [--repeats 3]
"""

import argparse
import time

import numpy as np

from qsar import kernels
from qsar.qft import QftSpec, build_qft
from qsar.qsim import StateVector, run_circuit


def _random_state(n, rng):
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return StateVector(n, v / np.linalg.norm(v), copy=False)


def _time_backend(name, n, repeats, rng):
    previous = kernels.use_backend(name)
    try:
        circuit = build_qft(QftSpec(n))
        phases = rng.uniform(-np.pi, np.pi, 1 << n)
        best_qft = best_diag = float("inf")
        for _ in range(repeats):
            state = _random_state(n, rng)
            t0 = time.perf_counter()
            run_circuit(state, circuit)
            best_qft = min(best_qft, time.perf_counter() - t0)
            t0 = time.perf_counter()
            kernels.diagonal(state.amps, phases)
            best_diag = min(best_diag, time.perf_counter() - t0)
        return best_qft, best_diag
    finally:
        kernels.use_backend(previous)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--min-n", type=int, default=10)
    parser.add_argument("--max-n", type=int, default=18)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1234)
    args = parser.parse_args()

    backends = sorted(kernels.available_backends())
    print(f"available backends: {', '.join(backends)}")
    if len(backends) < 2:
        print("compiled extension not built; timing the python backend only")

    rng = np.random.default_rng(args.seed)
    header = f"{'n':>3} " + "".join(f"{b + ' qft (s)':>16}{b + ' diag (s)':>16}" for b in backends)
    if len(backends) == 2:
        header += f"{'qft ratio':>12}{'diag ratio':>12}"
    print(header)
    for n in range(args.min_n, args.max_n + 1):
        row = f"{n:>3} "
        results = {}
        for b in backends:
            results[b] = _time_backend(b, n, args.repeats, rng)
            row += f"{results[b][0]:>16.6f}{results[b][1]:>16.6f}"
        if len(backends) == 2:
            row += f"{results['python'][0] / results['c'][0]:>12.2f}"
            row += f"{results['python'][1] / results['c'][1]:>12.2f}"
        print(row)


if __name__ == "__main__":
    main()
