#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

The kernel source is shared; GAMOWSUSY_DISABLE_NUMBA=1 runs it unjitted.
This script re-invokes itself in a subprocess for each backend so the flag is
set before import, times three representative workloads, and checks that both
paths return identical bits.

Usage: python3 benchmarks/bench_backends.py [--points N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def run_workloads(n_points: int) -> dict:
    import numpy as np

    from gamowsusy import _ddcore
    from gamowsusy._backend import backend_name

    k = complex(-0.52, 0.1)
    r = np.geomspace(1e-3, 40.0, n_points)
    results = {"backend": backend_name(), "n_points": n_points, "timings": {}}

    # warm-up triggers jit compilation so timings measure steady state
    _ddcore.wave_grid(1, k, 0j, r[:8])
    _ddcore.wave_grid(1, k, 1 + 0j, r[:8])
    _ddcore.integrate_coulomb(
        1, -2.0, complex(-0.2604, 0.104), 0.01, 1e-4 + 0j, 0.02 + 0j,
        np.array([1.0]), 1e-10,
    )

    t0 = time.perf_counter()
    w0, dw0, _s, _e, _st = _ddcore.wave_grid(1, k, 0j, r)
    results["timings"]["gamow_vector_grid"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    w1, dw1, _s, _e, _st = _ddcore.wave_grid(1, k, 1 + 0j, r)
    results["timings"]["generalized_grid"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    psi, dpsi, _st2, _lr = _ddcore.integrate_coulomb(
        1, -2.0, complex(-0.2604, 0.104), 0.01, 1e-4 + 0j, 0.02 + 0j,
        np.linspace(1.0, 20.0, 40), 1e-10,
    )
    results["timings"]["rk_oracle"] = time.perf_counter() - t0

    results["checksum"] = [
        [w0[-1].real, w0[-1].imag],
        [w1[-1].real, w1[-1].imag],
        [psi[-1].real, psi[-1].imag],
    ]
    return results


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=1000,
                    help="grid size (the python path is ~100x slower)")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.worker:
        print(json.dumps(run_workloads(args.points)))
        return 0

    runs = {}
    for label, disable in (("numba", "0"), ("python", "1")):
        env = dict(os.environ)
        env["GAMOWSUSY_DISABLE_NUMBA"] = disable
        proc = subprocess.run(
            [sys.executable, __file__, "--worker", "--points", str(args.points)],
            env=env, capture_output=True, text=True,
        )
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            return 1
        runs[label] = json.loads(proc.stdout.strip().splitlines()[-1])

    if runs["numba"]["checksum"] != runs["python"]["checksum"]:
        print("ERROR: backends disagree", file=sys.stderr)
        return 1

    print(f"{'workload':24s} {'numba':>10s} {'python':>10s} {'speedup':>8s}")
    for name in runs["numba"]["timings"]:
        tn = runs["numba"]["timings"][name]
        tp = runs["python"]["timings"][name]
        print(f"{name:24s} {tn * 1e3:9.1f}ms {tp * 1e3:9.1f}ms {tp / tn:7.1f}x")
    print(f"\n(identical outputs confirmed on {args.points}-point grids)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
