"""Pure-Python (numpy) distance kernels, the fallback backend.

Each function fills a caller-allocated output array for rows ``start <= i <
stop`` against all rows ``j > i``.  Pair (i, j) with i < j lands at flat index
``i*n - i*(i+1)//2 + (j - i - 1)``, so results are identical no matter how the
row range is split across workers.
"""

import numpy as np


def _base(n: int, i: int) -> int:
    # flat index of pair (i, i+1)
    return i * n - (i * (i + 1)) // 2


def hamming_band(rows: np.ndarray, start: int, stop: int, out: np.ndarray) -> None:
    n = rows.shape[0]
    for i in range(start, stop):
        if i + 1 < n:
            b = _base(n, i)
            out[b : b + n - i - 1] = (rows[i + 1 :] != rows[i]).sum(axis=1)


def weighted_band(
    rows: np.ndarray, wtab: np.ndarray, m: int, start: int, stop: int, out: np.ndarray
) -> None:
    n = rows.shape[0]
    for i in range(start, stop):
        if i + 1 < n:
            b = _base(n, i)
            diffs = (rows[i] - rows[i + 1 :]) % m
            out[b : b + n - i - 1] = wtab[diffs].sum(axis=1)


def counts_band(rows: np.ndarray, m: int, start: int, stop: int, out: np.ndarray) -> None:
    n = rows.shape[0]
    for i in range(start, stop):
        if i + 1 < n:
            b = _base(n, i)
            diffs = (rows[i] - rows[i + 1 :]) % m
            k = diffs.shape[0]
            flat = (np.arange(k)[:, None] * m + diffs).ravel()
            out[b : b + k] = np.bincount(flat, minlength=k * m).reshape(k, m)
