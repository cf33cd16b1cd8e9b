"""Command-line front end.

One executable, ``qsar``, with the action selected by ``--command``:

* ``simulate-raw``   synthesize point-target raw data
* ``rda``            classical focusing
* ``rda-hybrid``     hybrid focusing, compared against classical
* ``qrda``           fully gate-based focusing, compared against classical
* ``rcmc-isolated``  diagonal-gate RCMC vs the classical elementwise filter
* ``compare``        elementwise comparison of two stored matrices
* ``qft-selftest``   simulator QFT against the brute-force DFT oracle

Exit codes: 0 success / within tolerance, 1 tolerance breach, 2 usage or
format error. A ``--config`` file supplies key=value defaults for any
flag; explicit flags win. All artifact files are deterministic for fixed
inputs and seeds.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

import numpy as np

from .encoding import decode, encode
from .errors import MatrixFormatError
from .matio import (
    load_matrix,
    magnitude_levels,
    phase_levels,
    random_complex_matrix,
    store_matrix,
    store_real_csv,
    write_pgm,
)
from .qft import QftSpec, build_qft, census, dft_oracle, gate_count
from .qsim import StateVector, apply_diagonal, run_circuit
from .rda import compare, peak_bin, rcmc_filter, run_classical, run_hybrid, run_qrda
from .sar import (
    PointTarget,
    default_params,
    expected_peak_bins,
    load_params,
    load_targets,
    simulate_raw,
    store_params,
)

COMMANDS = (
    "simulate-raw",
    "rda",
    "rda-hybrid",
    "qrda",
    "rcmc-isolated",
    "compare",
    "qft-selftest",
)

_DEFAULT_TOLERANCE = {
    "rda-hybrid": 1e-9,
    "qrda": 1e-8,
    "rcmc-isolated": 1e-9,
    "compare": 1e-9,
    "qft-selftest": 1e-10,
}

_FLAG_KEYS = (
    "command",
    "input",
    "output_dir",
    "params",
    "targets",
    "size",
    "seed",
    "tolerance",
    "max_n",
    "phase_only_range_ref",
)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qsar",
        description="Quantum-assisted range-doppler SAR processing testbed.",
    )
    parser.add_argument("--command", choices=COMMANDS, default=None,
                        help="action to run")
    parser.add_argument("--config", default=None,
                        help="key=value file supplying defaults for any flag")
    parser.add_argument("--input", nargs="+", default=None, metavar="PATH",
                        help="input matrix file(s); compare takes two")
    parser.add_argument("--output-dir", default=None,
                        help="directory for artifact files (default: .)")
    parser.add_argument("--params", default=None,
                        help="key=value radar parameter file (default: desk-scale set)")
    parser.add_argument("--targets", default=None,
                        help="CSV point-target file (default: one unit target)")
    parser.add_argument("--size", default=None, metavar="NRxNA",
                        help="matrix size for generation commands, e.g. 64x64")
    parser.add_argument("--seed", type=int, default=None,
                        help="RNG seed for generated data (default: 1234)")
    parser.add_argument("--tolerance", type=float, default=None,
                        help="breach threshold for comparison commands")
    parser.add_argument("--max-n", type=int, default=None,
                        help="largest register size for qft-selftest (default: 10)")
    parser.add_argument("--phase-only-range-ref", action="store_true", default=None,
                        help="use the unit-modulus range reference (required for qrda)")
    return parser


def _parse_config_file(path):
    values = {}
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, raw = line.partition("=")
            key = key.strip().replace("-", "_")
            raw = raw.strip()
            if key not in _FLAG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown option {key!r}")
            if key == "input":
                values[key] = [p.strip() for p in raw.split(",") if p.strip()]
            elif key in ("seed", "max_n"):
                values[key] = int(raw)
            elif key == "tolerance":
                values[key] = float(raw)
            elif key == "phase_only_range_ref":
                lowered = raw.lower()
                if lowered not in ("true", "false", "0", "1"):
                    raise ValueError(f"{path}:{lineno}: boolean expected, got {raw!r}")
                values[key] = lowered in ("true", "1")
            else:
                values[key] = raw
    return values


def _resolve(ns):
    """Merge CLI flags over config-file values over hard defaults."""
    merged = {}
    if ns.config is not None:
        merged.update(_parse_config_file(ns.config))
    for key in _FLAG_KEYS:
        value = getattr(ns, key)
        if value is not None:
            merged[key] = value
    command = merged.get("command")
    if command is None:
        raise ValueError("--command is required (flag or config file)")
    merged.setdefault("output_dir", ".")
    merged.setdefault("seed", 1234)
    merged.setdefault("max_n", 10)
    merged.setdefault("phase_only_range_ref", False)
    merged.setdefault("tolerance", _DEFAULT_TOLERANCE.get(command, 1e-9))
    merged.setdefault("input", None)
    merged.setdefault("params", None)
    merged.setdefault("targets", None)
    merged.setdefault("size", None)
    return argparse.Namespace(**merged)


def _parse_size(text):
    match = re.fullmatch(r"(\d+)[xX](\d+)", text or "")
    if not match:
        raise ValueError(f"--size must look like 64x64, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def _load_params_or_default(cfg, n_range):
    if cfg.params is not None:
        return load_params(cfg.params)
    return default_params(n_range)


def _single_input(cfg):
    if not cfg.input or len(cfg.input) != 1:
        raise ValueError("this command takes exactly one --input file")
    return load_matrix(cfg.input[0])


def _out(cfg, name):
    os.makedirs(cfg.output_dir, exist_ok=True)
    return os.path.join(cfg.output_dir, name)


def _fmt(value):
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _write_report(cfg, pairs):
    path = _out(cfg, "report.txt")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for key, value in pairs:
            fh.write(f"{key}={_fmt(value)}\n")
    return path


def _emit_comparison(cfg, report):
    store_real_csv(report.phase_diff_matrix, _out(cfg, "phase_diff.csv"))
    write_pgm(phase_levels(report.phase_diff_matrix), _out(cfg, "phase_diff.pgm"))


def _comparison_pairs(report, tolerance):
    status = "pass" if report.max_abs_phase_diff < tolerance else "breach"
    return [
        ("max_abs_phase_diff", report.max_abs_phase_diff),
        ("mean_abs_phase_diff", report.mean_abs_phase_diff),
        ("max_abs_magnitude_rel_diff", report.max_abs_magnitude_rel_diff),
        ("zero_magnitude_cells", report.zero_magnitude_cells),
        ("tolerance", tolerance),
        ("status", status),
    ], status


def _cmd_simulate_raw(cfg):
    n_range, n_azimuth = _parse_size(cfg.size or "64x64")
    params = _load_params_or_default(cfg, n_range)
    if cfg.targets is not None:
        targets = load_targets(cfg.targets)
    else:
        targets = [PointTarget(0.0, 0.0, 1.0 + 0.0j)]
    raw = simulate_raw(params, targets, n_range, n_azimuth)
    store_matrix(raw, _out(cfg, "raw.qsar"))
    store_params(params, _out(cfg, "params_used.txt"))
    pairs = [
        ("command", "simulate-raw"),
        ("n_range", n_range),
        ("n_azimuth", n_azimuth),
        ("n_targets", len(targets)),
    ]
    for i, tgt in enumerate(targets):
        rb, ab = expected_peak_bins(params, tgt, n_range, n_azimuth)
        pairs.append((f"target{i}_expected_range_bin", rb))
        pairs.append((f"target{i}_expected_azimuth_bin", ab))
    _write_report(cfg, pairs)
    return 0


def _cmd_pipeline(cfg):
    raw = _single_input(cfg)
    params = _load_params_or_default(cfg, raw.n_range)
    phase_only = bool(cfg.phase_only_range_ref)
    if cfg.command == "rda":
        image = run_classical(raw, params, phase_only_range_ref=phase_only)
        reference = None
    elif cfg.command == "rda-hybrid":
        image = run_hybrid(raw, params, phase_only_range_ref=phase_only)
        reference = run_classical(raw, params, phase_only_range_ref=phase_only)
    else:
        image = run_qrda(raw, params, phase_only_range_ref=phase_only)
        reference = run_classical(raw, params, phase_only_range_ref=True)
    store_matrix(image, _out(cfg, "image.qsar"))
    write_pgm(magnitude_levels(image), _out(cfg, "image.pgm"))
    mag = np.abs(image.data)
    rb, ab = peak_bin(image)
    pairs = [
        ("command", cfg.command),
        ("n_range", raw.n_range),
        ("n_azimuth", raw.n_azimuth),
        ("peak_range_bin", rb),
        ("peak_azimuth_bin", ab),
        ("peak_magnitude", float(mag.max())),
        ("median_magnitude", float(np.median(mag))),
    ]
    if reference is None:
        pairs.append(("status", "pass"))
        _write_report(cfg, pairs)
        return 0
    report = compare(image, reference)
    _emit_comparison(cfg, report)
    cmp_pairs, status = _comparison_pairs(report, cfg.tolerance)
    ref_rb, ref_ab = peak_bin(reference)
    pairs.append(("reference_peak_range_bin", ref_rb))
    pairs.append(("reference_peak_azimuth_bin", ref_ab))
    _write_report(cfg, pairs + cmp_pairs)
    return 0 if status == "pass" else 1


def _cmd_rcmc_isolated(cfg, theta_quantum=None):
    """Diagonal-gate RCMC vs the classical elementwise filter.

    ``theta_quantum`` overrides the gate phases only; tests use it as a
    negative control to force a breach.
    """
    if cfg.input:
        matrix = _single_input(cfg)
    else:
        n_range, n_azimuth = _parse_size(cfg.size or "64x64")
        matrix = random_complex_matrix(n_range, n_azimuth, cfg.seed)
    params = _load_params_or_default(cfg, matrix.n_range)
    theta = rcmc_filter(params, matrix.n_range, matrix.n_azimuth)
    classical = matrix.data * np.exp(1j * theta)
    encoded = encode(matrix.data)
    gate_phases = theta if theta_quantum is None else np.asarray(theta_quantum)
    apply_diagonal(encoded.state, gate_phases.ravel())
    quantum = decode(encoded)
    report = compare(quantum, classical)
    store_matrix(quantum, _out(cfg, "quantum.qsar"))
    write_pgm(magnitude_levels(quantum), _out(cfg, "magnitude.pgm"))
    _emit_comparison(cfg, report)
    cmp_pairs, status = _comparison_pairs(report, cfg.tolerance)
    pairs = [
        ("command", "rcmc-isolated"),
        ("n_range", matrix.n_range),
        ("n_azimuth", matrix.n_azimuth),
        ("seed", cfg.seed),
    ] + cmp_pairs
    _write_report(cfg, pairs)
    return 0 if status == "pass" else 1


def _cmd_compare(cfg):
    if not cfg.input or len(cfg.input) != 2:
        raise ValueError("compare takes exactly two --input files")
    a = load_matrix(cfg.input[0])
    b = load_matrix(cfg.input[1])
    report = compare(a, b)
    _emit_comparison(cfg, report)
    cmp_pairs, status = _comparison_pairs(report, cfg.tolerance)
    _write_report(cfg, [("command", "compare")] + cmp_pairs)
    return 0 if status == "pass" else 1


def _cmd_qft_selftest(cfg):
    rng = np.random.default_rng(cfg.seed)
    vectors_per_n = 20
    lines = []
    worst = 0.0
    for n in range(1, cfg.max_n + 1):
        spec = QftSpec(n)
        circuit = build_qft(spec)
        counts = census(circuit)
        if counts != gate_count(spec):
            raise RuntimeError(f"gate census mismatch at n={n}: {counts}")
        max_err = 0.0
        for _ in range(vectors_per_n):
            v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
            v /= np.linalg.norm(v)
            state = StateVector.from_vector(v)
            run_circuit(state, circuit)
            max_err = max(max_err, float(np.abs(state.amps - dft_oracle(v)).max()))
        worst = max(worst, max_err)
        lines.append(
            f"n={n} max_error={max_err:.3e} hadamard={counts.hadamard} "
            f"controlled_phase={counts.controlled_phase} swap={counts.swap}"
        )
    status = "pass" if worst < cfg.tolerance else "breach"
    for line in lines:
        print(line)
    print(f"status={status} worst={worst:.3e} tolerance={cfg.tolerance:.3e}")
    path = _out(cfg, "report.txt")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write(f"\nstatus={status}\nworst={worst:.17g}\ntolerance={cfg.tolerance:.17g}\n")
    return 0 if status == "pass" else 1


_HANDLERS = {
    "simulate-raw": _cmd_simulate_raw,
    "rda": _cmd_pipeline,
    "rda-hybrid": _cmd_pipeline,
    "qrda": _cmd_pipeline,
    "rcmc-isolated": _cmd_rcmc_isolated,
    "compare": _cmd_compare,
    "qft-selftest": _cmd_qft_selftest,
}


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits itself on usage errors / --help
        return int(exc.code or 0)
    try:
        cfg = _resolve(ns)
        return _HANDLERS[cfg.command](cfg)
    except (ValueError, RuntimeError, OSError, MatrixFormatError) as exc:
        print(f"qsar: error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
