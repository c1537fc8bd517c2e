"""Backend selection and deterministic banded parallelism for distance kernels.

Two interchangeable backends compute pairwise row statistics:

* ``hadacode._kernels``: a compiled Cython extension (preferred when built);
* ``hadacode._kernels_py``: a numpy fallback with identical semantics.

``HADACODE_KERNEL`` forces a backend (``python`` or ``cython``) and
``HADACODE_THREADS`` caps the number of worker threads.  Results are
bit-identical across backends, thread counts, and schedules: every (i, j)
pair owns a fixed slot in the output array.
"""

import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

__all__ = [
    "backend_name",
    "worker_count",
    "pairwise_hamming",
    "pairwise_weighted",
    "pairwise_difference_counts",
    "pair_count",
    "pair_from_index",
]

# banded threading is pure overhead below this many rows
_MIN_ROWS_FOR_THREADS = 64


def _select_backend():
    forced = os.environ.get("HADACODE_KERNEL", "").strip().lower()
    if forced == "python":
        return _kernels_py, "python"
    if forced == "cython":
        if _compiled is None:
            raise RuntimeError("HADACODE_KERNEL=cython but the compiled extension is not built")
        return _compiled, "cython"
    if forced:
        raise RuntimeError(f"unknown HADACODE_KERNEL value {forced!r}; use 'python' or 'cython'")
    if _compiled is not None:
        return _compiled, "cython"
    return _kernels_py, "python"


def backend_name() -> str:
    """Name of the backend the next kernel call will use."""
    return _select_backend()[1]


def worker_count() -> int:
    """Thread cap from HADACODE_THREADS, defaulting to min(4, cpu count)."""
    raw = os.environ.get("HADACODE_THREADS", "").strip()
    if not raw:
        return min(4, os.cpu_count() or 1)
    count = int(raw)
    if count < 1:
        raise ValueError(f"HADACODE_THREADS must be >= 1, got {count}")
    return count


def pair_count(n: int) -> int:
    return n * (n - 1) // 2

def pair_from_index(n: int, index: int) -> tuple[int, int]:
    """Invert the flat pair layout: index -> (i, j) with i < j."""
    if not 0 <= index < pair_count(n):
        raise IndexError(f"pair index {index} out of range for n={n}")
    i = 0
    while index >= n - 1 - i:
        index -= n - 1 - i
        i += 1
    return i, i + 1 + index


def _band_bounds(n: int, workers: int) -> list[tuple[int, int]]:
    # balance by pair load: row i contributes n-1-i pairs
    total = pair_count(n)
    target = total / workers
    bounds = []
    start = 0
    acc = 0
    for i in range(n):
        acc += n - 1 - i
        if acc >= target * (len(bounds) + 1) and i + 1 > start:
            bounds.append((start, i + 1))
            start = i + 1
    if start < n:
        bounds.append((start, n))
    return bounds


def _run_banded(fill, n: int) -> None:
    workers = worker_count()
    if workers <= 1 or n < _MIN_ROWS_FOR_THREADS:
        fill(0, n)
        return
    bounds = _band_bounds(n, workers)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for future in [pool.submit(fill, s, e) for s, e in bounds]:
            future.result()


def _as_matrix(rows, m=None) -> np.ndarray:
    mat = np.ascontiguousarray(np.asarray(rows, dtype=np.int64))
    if mat.ndim != 2:
        raise ValueError(f"expected a 2-d row matrix, got shape {mat.shape}")
    if m is not None:
        if m < 1:
            raise ValueError(f"modulus must be >= 1, got {m}")
        mat = np.ascontiguousarray(mat % m)
    return mat


def pairwise_hamming(rows) -> np.ndarray:
    """Hamming distance for every unordered row pair, in flat (i, j) order."""
    mat = _as_matrix(rows)
    n = mat.shape[0]
    out = np.zeros(pair_count(n), dtype=np.int64)
    backend, _ = _select_backend()
    _run_banded(lambda s, e: backend.hamming_band(mat, s, e, out), n)
    return out


def pairwise_weighted(rows, m: int, weights) -> np.ndarray:
    """Sum of weights[(a - b) mod m] per coordinate, for every unordered pair.

    ``weights`` must be integers (callers pre-scale rational weight tables).
    """
    wtab = np.ascontiguousarray(np.asarray(weights, dtype=np.int64))
    if wtab.shape != (m,):
        raise ValueError(f"weight table must have length m={m}, got shape {wtab.shape}")
    mat = _as_matrix(rows, m)
    n = mat.shape[0]
    out = np.zeros(pair_count(n), dtype=np.int64)
    backend, _ = _select_backend()
    _run_banded(lambda s, e: backend.weighted_band(mat, wtab, m, s, e, out), n)
    return out


def pairwise_difference_counts(rows, m: int) -> np.ndarray:
    """Histogram of (a_il - a_jl) mod m per unordered row pair; shape (pairs, m)."""
    mat = _as_matrix(rows, m)
    n = mat.shape[0]
    out = np.zeros((pair_count(n), m), dtype=np.int64)
    backend, _ = _select_backend()
    _run_banded(lambda s, e: backend.counts_band(mat, m, s, e, out), n)
    return out
