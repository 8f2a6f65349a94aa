#!/usr/bin/env python3
"""Compare the compiled gate kernels against the pure-numpy fallback.

Runs a handful of representative workloads with both backends and
reports the best per-call wall time of several repeats. Before timing
anything it replays a mixed random gate sequence on both backends and
insists on bitwise-identical amplitudes; the two implementations share
one floating-point contract, so any mismatch is a bug, not noise.

Usage: python benchmarks/bench_kernels.py [--repeats N] [--inner N]
"""

import argparse
import sys
import time

import numpy as np

from qaflow import _kernels_py

try:
    from qaflow import _kernels as _compiled
except ImportError:
    _compiled = None


def random_batch(rng, batch, n_qubits):
    dim = 1 << n_qubits
    amps = (rng.standard_normal((batch, dim))
            + 1j * rng.standard_normal((batch, dim)))
    amps /= np.linalg.norm(amps, axis=1, keepdims=True)
    return np.ascontiguousarray(amps, dtype=np.complex128)


def ring_edges(n_qubits):
    return [tuple(sorted((i, (i + 1) % n_qubits)))
            for i in range(n_qubits)]


def layer(mod, amps, n_qubits):
    for q in range(n_qubits):
        mod.apply_rx(amps, n_qubits, q, 0.173)
    for a, b in ring_edges(n_qubits):
        mod.apply_rzz(amps, n_qubits, a, b, -0.091)


def pauli_pass(mod, amps, n_qubits, rows):
    for q in range(n_qubits):
        mod.apply_pauli(amps, n_qubits, q, 1 + q % 3, rows)


def verify_backends(rng):
    """Replay one random op sequence on both backends, byte for byte."""
    n_qubits = 6
    base = random_batch(rng, 16, n_qubits)
    a, b = base.copy(), base.copy()
    rows = np.sort(rng.choice(16, size=8, replace=False)).astype(np.int64)
    for _ in range(200):
        kind = rng.integers(3)
        if kind == 0:
            q = int(rng.integers(n_qubits))
            theta = float(rng.uniform(-np.pi, np.pi))
            _kernels_py.apply_rx(a, n_qubits, q, theta)
            _compiled.apply_rx(b, n_qubits, q, theta)
        elif kind == 1:
            qa, qb = map(int, rng.choice(n_qubits, size=2, replace=False))
            qa, qb = min(qa, qb), max(qa, qb)
            theta = float(rng.uniform(-np.pi, np.pi))
            _kernels_py.apply_rzz(a, n_qubits, qa, qb, theta)
            _compiled.apply_rzz(b, n_qubits, qa, qb, theta)
        else:
            q = int(rng.integers(n_qubits))
            code = int(rng.integers(1, 4))
            _kernels_py.apply_pauli(a, n_qubits, q, code, rows)
            _compiled.apply_pauli(b, n_qubits, q, code, rows)
        if not np.array_equal(a, b):
            sys.exit("backend mismatch: amplitudes differ bitwise")
    print("bitwise agreement over 200 random ops: ok")


def best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5,
                        help="timing repeats per workload (default 5)")
    parser.add_argument("--inner", type=int, default=20,
                        help="gate layers per timed call (default 20)")
    args = parser.parse_args(argv)

    rng = np.random.default_rng(20240817)
    if _compiled is None:
        print("compiled extension not available; timing fallback only")
    else:
        verify_backends(rng)

    # (label, batch, qubits): single deep circuit, the noise sampler's
    # trajectory batches, and the column-batch used to build unitaries
    workloads = [
        ("circuit layers,   1 x 2^10", 1, 10),
        ("trajectory batch, 512 x 2^5", 512, 5),
        ("unitary columns,  1024 x 2^10", 1024, 10),
    ]
    backends = [("python", _kernels_py)]
    if _compiled is not None:
        backends.append(("compiled", _compiled))

    header = f"{'workload':32}" + "".join(f"{name:>12}" for name, _ in
                                          backends)
    if _compiled is not None:
        header += f"{'speedup':>10}"
    print()
    print(header)
    print("-" * len(header))
    for label, batch, n_qubits in workloads:
        times = []
        for _, mod in backends:
            amps = random_batch(rng, batch, n_qubits)
            fn = lambda: [layer(mod, amps, n_qubits)
                          for _ in range(args.inner)]
            fn()  # warm-up
            times.append(best_time(fn, args.repeats))
        row = f"{label:32}" + "".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)

    rows = np.arange(0, 512, 2, dtype=np.int64)
    times = []
    for _, mod in backends:
        amps = random_batch(rng, 512, 5)
        fn = lambda: [pauli_pass(mod, amps, 5, rows)
                      for _ in range(args.inner)]
        fn()
        times.append(best_time(fn, args.repeats))
    row = f"{'pauli inserts,    256 x 2^5':32}"
    row += "".join(f"{t * 1e3:>10.2f}ms" for t in times)
    if len(times) == 2:
        row += f"{times[0] / times[1]:>9.1f}x"
    print(row)


if __name__ == "__main__":
    main()
