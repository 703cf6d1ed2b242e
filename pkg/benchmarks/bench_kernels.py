#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times the hot primitives on workloads shaped like the library's real call
patterns (scalar evaluations inside refinement loops, batched grids inside
domain scans) and prints one table row per case.

Usage:
    python benchmarks/bench_kernels.py [--repeats 5]
"""

import argparse
import math
import time

import numpy as np

from thetamin import _slow

try:
    from thetamin import _fast
except ImportError:
    _fast = None


def best_of(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(7)
    xs = rng.uniform(0.0, 0.5, size=4096)
    ys = rng.uniform(0.87, 12.0, size=4096)

    def scalar_theta1d(mod):
        for _ in range(2000):
            mod.theta1d_partial(0.9, 0.37, 12)

    def scalar_lattice(mod):
        for _ in range(400):
            mod.lattice_sum(1.0, 0.5, math.sqrt(3) / 2, 10)

    def scalar_radial(mod):
        for _ in range(100):
            mod.lattice_sums_radial(1.0, 0.5, 1.2, 12)

    def grid(mod):
        mod.lattice_sum_grid(1.0, xs, ys, 14)

    yield "theta1d partial x2000 (N=12)", scalar_theta1d
    yield "lattice_sum x400 (R=10)", scalar_lattice
    yield "radial sums x100 (R=12)", scalar_radial
    yield "lattice_sum_grid 4096 pts (R=14)", grid


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    header = f"{'case':<36} {'numpy':>10} {'cython':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, fn in cases():
        t_slow = best_of(lambda: fn(_slow), args.repeats)
        if _fast is not None:
            t_fast = best_of(lambda: fn(_fast), args.repeats)
            print(f"{name:<36} {t_slow * 1e3:>8.2f}ms {t_fast * 1e3:>8.2f}ms "
                  f"{t_slow / t_fast:>8.1f}x")
        else:
            print(f"{name:<36} {t_slow * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>9}")
    if _fast is None:
        print("\ncompiled kernels unavailable; install with a C toolchain "
              "to compare")


if __name__ == "__main__":
    main()
