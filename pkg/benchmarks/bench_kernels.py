"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--rows N] [--bands K]

Times the two hot census kernels (the pairwise quasipositivity batch and the
boundary-component batch) plus the scalar pair check, on both backends, and
prints rows/second with the speedup ratio.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from braidzel import _pure

try:
    from braidzel import _speedups
except ImportError:
    _speedups = None


def _best_time(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def _bench_batch(name: str, rows: np.ndarray, pure_fn, fast_fn) -> None:
    n = len(rows)
    t_pure = _best_time(pure_fn, rows, repeat=1)
    line = f"{name:28s} pure: {n / t_pure:12,.0f} rows/s"
    if fast_fn is not None:
        t_fast = _best_time(fast_fn, rows)
        line += f"   compiled: {n / t_fast:14,.0f} rows/s   speedup: {t_pure / t_fast:7.1f}x"
    print(line)


def _bench_scalar(tuples, pure_fn, fast_fn) -> None:
    n = len(tuples)

    def run(fn):
        for t in tuples:
            fn(t)

    t_pure = _best_time(run, pure_fn, repeat=1)
    line = f"{'first_bad_pair (scalar)':28s} pure: {n / t_pure:12,.0f} calls/s"
    if fast_fn is not None:
        t_fast = _best_time(run, fast_fn)
        line += f"   compiled: {n / t_fast:14,.0f} calls/s   speedup: {t_pure / t_fast:7.1f}x"
    print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--rows", type=int, default=500_000)
    parser.add_argument("--bands", type=int, default=6)
    args = parser.parse_args()

    rng = np.random.default_rng(7)
    rows = rng.integers(-7, 8, size=(args.rows, args.bands)).astype(np.int64)
    tuples = [tuple(int(x) for x in row) for row in rows[:50_000]]

    print(f"rows={args.rows:,}  bands={args.bands}")
    if _speedups is None:
        print("compiled kernels not available; showing the pure backend only")
    _bench_batch(
        "qp_all_negative_batch",
        rows,
        _pure.qp_all_negative_batch,
        _speedups.qp_all_negative_batch if _speedups else None,
    )
    _bench_batch(
        "pretzel_boundary_batch",
        rows,
        _pure.pretzel_boundary_batch,
        _speedups.pretzel_boundary_batch if _speedups else None,
    )
    _bench_scalar(
        tuples,
        _pure.first_bad_pair,
        _speedups.first_bad_pair if _speedups else None,
    )


if __name__ == "__main__":
    main()
