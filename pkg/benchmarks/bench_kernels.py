"""Compare the compiled iteration kernels against the pure-Python fallback.

Run from the repository root after installing the package:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import time

import numpy as np

from neuromod import _kernels_py

try:
    from neuromod import _kernels
except ImportError:
    _kernels = None


def _best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _workloads(steps, iters, record):
    ramp = np.linspace(-5.0, 5.0, steps)
    const = lambda v: np.full(steps, v)
    return [
        (
            f"orbit_two  (transient 1000, record {record})",
            lambda k: k.orbit_two(0.0, 3.0, 0.0, -4.0, 5.0, 0.0, 1.0, 0.3,
                                  -3.0, -2.0, 1000, record),
        ),
        (
            f"scan_two   ({steps} steps x {iters} iterations)",
            lambda k: k.scan_two(ramp, const(3.0), const(0.0), const(-4.0),
                                 const(5.0), const(0.0), const(1.0), const(0.3),
                                 iters, -3.0, -2.0),
        ),
        (
            f"scan_single({steps} steps x {iters} iterations)",
            lambda k: k.scan_single(np.linspace(-5.0, 0.0, steps), const(0.5)[:steps],
                                    const(3.0)[:steps], iters, -10.0),
        ),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=50000)
    ap.add_argument("--iters", type=int, default=8)
    ap.add_argument("--record", type=int, default=200000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels is None:
        print("compiled backend not importable; timing the fallback only")

    print(f"{'workload':44s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, call in _workloads(args.steps, args.iters, args.record):
        t_py = _best_of(lambda: call(_kernels_py), args.repeat)
        if _kernels is None:
            print(f"{name:44s} {t_py * 1e3:8.1f}ms {'-':>10s} {'-':>8s}")
            continue
        t_c = _best_of(lambda: call(_kernels), args.repeat)
        print(f"{name:44s} {t_py * 1e3:8.1f}ms {t_c * 1e3:8.1f}ms {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
