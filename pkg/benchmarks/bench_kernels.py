"""Benchmark the compiled distance kernels against the numpy fallback.

Runs each pairwise kernel on the same random exponent matrix under both
backends, checks that the outputs are bit-identical, and reports best-of-N
wall times with the speedup of the compiled path.

Usage:
    python3 benchmarks/bench_kernels.py [--rows 400] [--length 256] [--m 9]
"""

import argparse
import os
import time

import numpy as np

from hadacode import kernels


def _time_call(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _with_backend(name: str, fn):
    previous = os.environ.get("HADACODE_KERNEL")
    os.environ["HADACODE_KERNEL"] = name
    try:
        return fn()
    finally:
        if previous is None:
            del os.environ["HADACODE_KERNEL"]
        else:
            os.environ["HADACODE_KERNEL"] = previous


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=400)
    parser.add_argument("--length", type=int, default=256)
    parser.add_argument("--m", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    rows = rng.integers(0, args.m, size=(args.rows, args.length), dtype=np.int64)
    weights = rng.integers(0, 100, size=args.m, dtype=np.int64)

    backends = ["python"]
    try:
        _with_backend("cython", kernels.backend_name)
        backends.append("cython")
    except RuntimeError:
        pass

    tasks = {
        "pairwise_hamming": lambda: kernels.pairwise_hamming(rows),
        "pairwise_weighted": lambda: kernels.pairwise_weighted(rows, args.m, weights),
        "pairwise_difference_counts": lambda: kernels.pairwise_difference_counts(rows, args.m),
    }

    print(
        f"rows={args.rows} length={args.length} m={args.m} "
        f"repeat={args.repeat} threads={kernels.worker_count()}"
    )
    print(f"{'kernel':<28} " + " ".join(f"{b:>12}" for b in backends) + "  speedup")
    for name, fn in tasks.items():
        times = {}
        results = {}
        for backend in backends:
            results[backend] = _with_backend(backend, fn)
            times[backend] = _with_backend(backend, lambda: _time_call(fn, args.repeat))
        reference = results[backends[0]]
        for backend in backends[1:]:
            if not np.array_equal(results[backend], reference):
                raise AssertionError(f"{name}: backends disagree")
        line = f"{name:<28} " + " ".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"  {times[backends[0]] / times[backends[1]]:>6.1f}x"
        print(line)
    print("outputs bit-identical across backends" if len(backends) == 2 else "compiled backend unavailable")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
