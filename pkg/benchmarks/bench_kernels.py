#!/usr/bin/env python3
"""Benchmark the compiled kernel core against the numpy fallback.

Times the three hot paths (4x4 Hermitian eigensolve, ergotropy phase scan,
and a threshold-style curve with per-point time maximization) on every
available backend and prints a comparison table.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--points N]
"""

import argparse
import time

import numpy as np

from qbsim import EvalMode, Metric, ModelParams, SweepAxis, SweepConfig, run_sweep
from qbsim.backend import available_backends, get_backend


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_backend(name, repeat):
    kernels = get_backend(name)
    rng = np.random.default_rng(101)
    mats = []
    for _ in range(500):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        mats.append((a + a.conj().T) / 2)

    def eig_batch():
        for m in mats:
            kernels.jacobi_eigh(m)

    h = mats[0]
    w, v, _ = kernels.jacobi_eigh(h)
    ex = np.exp(-(w - w.min()) / 0.1)
    rho = (v * (ex / ex.sum())) @ v.conj().T
    phases = np.linspace(0, 2 * np.pi, 512)

    def scan_batch():
        for _ in range(200):
            kernels.xi_phase_scan(h, rho, 1, phases)

    results = {
        "eigh 4x4 x500": _time(eig_batch, repeat),
        "xi scan 512 x200": _time(scan_batch, repeat),
    }
    return results


def bench_curve(name, repeat, points):
    # numeric-mode threshold-style curve: per-point eig + scan + refinement;
    # the sweep engine resolves kernels through qbsim.backend, so rebind them
    cfg = SweepConfig(
        base=ModelParams(j=1.0, gamma=0.5, delta=0.5, theta=np.pi / 2, temperature=0.1),
        axis1=SweepAxis("dz", 0.0, 3.0, points),
        metric=Metric.ERGOTROPY_MAX,
        time_window=(0.0, np.pi),
        mode=EvalMode.NUMERIC,
    )
    import qbsim.backend as b
    kernels = get_backend(name)
    saved = (b.jacobi_eigh, b.unitary_stack, b.xi_phase_scan, b.coherence_phase_scan)
    b.jacobi_eigh = kernels.jacobi_eigh
    b.unitary_stack = kernels.unitary_stack
    b.xi_phase_scan = kernels.xi_phase_scan
    b.coherence_phase_scan = kernels.coherence_phase_scan
    try:
        return _time(lambda: run_sweep(cfg), repeat)
    finally:
        b.jacobi_eigh, b.unitary_stack, b.xi_phase_scan, b.coherence_phase_scan = saved


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--points", type=int, default=100, help="curve points for the sweep benchmark")
    args = ap.parse_args()

    names = available_backends()
    print(f"backends: {', '.join(names)}\n")
    table = {}
    for name in names:
        table[name] = bench_backend(name, args.repeat)
        table[name][f"max-ergotropy curve x{args.points}"] = bench_curve(name, args.repeat, args.points)

    rows = list(next(iter(table.values())).keys())
    width = max(len(r) for r in rows)
    header = f"{'benchmark':<{width}}" + "".join(f"{n:>14}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for row in rows:
        line = f"{row:<{width}}"
        for n in names:
            line += f"{table[n][row] * 1e3:>12.2f}ms"
        if len(names) == 2:
            a, b = (table[n][row] for n in names)
            line += f"{a / b:>9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
