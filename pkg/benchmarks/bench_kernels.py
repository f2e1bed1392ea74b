#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot paths (connected-mask scan, orbit-collapsing
enumeration, Jacobi eigensolves) on both backends and prints a table.
The first numba call pays JIT compilation; a warmup run absorbs it.

    python benchmarks/bench_kernels.py --n 7 --repeat 3
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qec import kernels
from qec.bits import n_bits
from qec.canon import perm_table
from qec.classify import enumerate_connected


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_scan(n, backend, repeat):
    return timed(lambda: kernels.connected_masks(n, backend=backend).size, repeat)


def bench_orbits(n, backend, repeat):
    masks = kernels.connected_masks(n, backend=backend)
    table = perm_table(n)

    def run():
        seen = np.zeros(1 << n_bits(n), dtype=np.uint8)
        classes = 0
        for mask in masks.tolist():
            if seen[mask]:
                continue
            kernels.orbit_min_mark(mask, table, seen, backend=backend)
            classes += 1
        return classes

    return timed(run, repeat)


def bench_jacobi(backend, repeat, count=200, size=9):
    rng = np.random.default_rng(7)
    mats = rng.standard_normal((count, size, size))
    mats = 0.5 * (mats + mats.transpose(0, 2, 1))

    def run():
        acc = 0.0
        for m in mats:
            w, _ = kernels.jacobi_eigh(m, backend=backend)
            acc += float(w[0])
        return round(acc, 6)

    return timed(run, repeat)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=7, help="enumeration order (<= 7)")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])
    if kernels.HAVE_NUMBA:
        # absorb JIT compilation before timing
        kernels.connected_masks(4, backend="numba")
        seen = np.zeros(1 << n_bits(4), dtype=np.uint8)
        kernels.orbit_min_mark(0, perm_table(4), seen, backend="numba")
        kernels.jacobi_eigh(np.eye(3), backend="numba")

    rows = []
    results: dict[str, dict[str, float]] = {}
    for backend in backends:
        scan_t, scan_n = bench_scan(args.n, backend, args.repeat)
        orbit_t, classes = bench_orbits(args.n, backend, args.repeat)
        jac_t, _ = bench_jacobi(backend, args.repeat)
        results[backend] = {"scan": scan_t, "orbits": orbit_t, "jacobi": jac_t}
        rows.append((backend, scan_t, scan_n, orbit_t, classes, jac_t))

    print(f"enumeration order n={args.n}, best of {args.repeat}")
    print(f"{'backend':8} {'scan [s]':>10} {'masks':>9} {'orbits [s]':>11} "
          f"{'classes':>8} {'jacobi [s]':>11}")
    for backend, scan_t, scan_n, orbit_t, classes, jac_t in rows:
        print(f"{backend:8} {scan_t:10.3f} {scan_n:9d} {orbit_t:11.3f} "
              f"{classes:8d} {jac_t:11.3f}")
    if len(results) == 2:
        for key in ("scan", "orbits", "jacobi"):
            ratio = results["numpy"][key] / max(results["numba"][key], 1e-12)
            print(f"speedup {key}: {ratio:.1f}x")

    t0 = time.perf_counter()
    classes = len(enumerate_connected(args.n))
    print(f"end-to-end enumerate_connected({args.n}) -> {classes} classes "
          f"in {time.perf_counter() - t0:.3f}s (active backend: {kernels.active_backend()})")


if __name__ == "__main__":
    main()
