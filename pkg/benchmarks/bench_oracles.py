#!/usr/bin/env python3
"""Benchmark the oracle summation kernels: numba JIT vs pure NumPy.

Times the three kernels on taxicab-circle partitions of increasing size and
prints one row per (kernel, n).  The JIT path is warmed up before timing so
compilation cost is not mixed into the numbers.

Usage:
    python benchmarks/bench_oracles.py --sizes 1000,100000,1000000 --repeat 5
"""

import argparse
import time

import numpy as np

from taximeasure import _kernels


def _partition(n: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    xs = np.linspace(-1.0, 1.0, n + 1)
    fx = 1.0 - np.abs(xs)
    mids = 0.5 * (xs[:-1] + xs[1:])
    fm = 1.0 - np.abs(mids)
    return xs, fx, fm


def _best_of(repeat: int, fn, *args) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,100000,1000000",
                        help="comma-separated partition sizes")
    parser.add_argument("--repeat", type=int, default=5,
                        help="timing repetitions; the best run is reported")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]

    backends = [("numpy", (_kernels.polyline_sum_numpy, _kernels.frustum_sum_numpy,
                           _kernels.disk_sum_numpy))]
    if _kernels.BACKEND == "numba":
        backends.append(("numba", (_kernels.polyline_sum, _kernels.frustum_sum,
                                   _kernels.disk_sum)))
        # trigger JIT compilation outside the timed region
        xs, fx, fm = _partition(8)
        for fn in backends[-1][1]:
            fn(xs, fx if fn is not _kernels.disk_sum else fm)
    else:
        print("note: numba backend unavailable, timing NumPy only")

    print(f"{'kernel':<10} {'backend':<8} {'n':>9} {'best_ms':>10} {'value':>20}")
    for n in sizes:
        xs, fx, fm = _partition(n)
        for backend, (poly, frus, disk) in backends:
            for name, fn, data in (("polyline", poly, fx), ("frustum", frus, fx),
                                   ("disk", disk, fm)):
                dt = _best_of(args.repeat, fn, xs, data)
                value = fn(xs, data)
                print(f"{name:<10} {backend:<8} {n:>9} {dt * 1e3:>10.3f} {value:>20.12f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
