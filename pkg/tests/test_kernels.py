"""Backend-equivalence and determinism tests for the distance kernels."""

import random

import numpy as np
import pytest

from hadacode import kernels


def naive_hamming(rows):
    n = len(rows)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(sum(1 for a, b in zip(rows[i], rows[j]) if a != b))
    return out


def naive_weighted(rows, m, weights):
    n = len(rows)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(sum(weights[(a - b) % m] for a, b in zip(rows[i], rows[j])))
    return out


def naive_counts(rows, m):
    n = len(rows)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            hist = [0] * m
            for a, b in zip(rows[i], rows[j]):
                hist[(a - b) % m] += 1
            out.append(hist)
    return out


def random_rows(rng, n, length, m):
    return [[rng.randrange(m) for _ in range(length)] for _ in range(n)]


BACKENDS = ["python"]
if kernels._compiled is not None:
    BACKENDS.append("cython")


@pytest.fixture(params=BACKENDS)
def backend(request, monkeypatch):
    monkeypatch.setenv("HADACODE_KERNEL", request.param)
    return request.param


def test_backends_match_naive_reference(backend):
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randrange(2, 12)
        length = rng.randrange(1, 20)
        m = rng.randrange(2, 37)
        rows = random_rows(rng, n, length, m)
        assert kernels.pairwise_hamming(rows).tolist() == naive_hamming(rows)
        weights = [0] + [rng.randrange(6) for _ in range(m - 1)]
        assert kernels.pairwise_weighted(rows, m, weights).tolist() == naive_weighted(
            rows, m, weights
        )
        assert kernels.pairwise_difference_counts(rows, m).tolist() == naive_counts(rows, m)


def test_backends_agree_on_large_input(monkeypatch):
    if kernels._compiled is None:
        pytest.skip("compiled backend not built")
    rng = np.random.default_rng(11)
    rows = rng.integers(0, 36, size=(90, 40))
    weights = rng.integers(0, 9, size=36)
    weights[0] = 0
    results = {}
    for name in ("python", "cython"):
        monkeypatch.setenv("HADACODE_KERNEL", name)
        results[name] = (
            kernels.pairwise_hamming(rows),
            kernels.pairwise_weighted(rows, 36, weights),
            kernels.pairwise_difference_counts(rows, 36),
        )
    for a, b in zip(results["python"], results["cython"]):
        assert np.array_equal(a, b)


def test_thread_count_does_not_change_results(backend, monkeypatch):
    rng = np.random.default_rng(3)
    rows = rng.integers(0, 10, size=(80, 17))
    reference = None
    for threads in ("1", "2", "5"):
        monkeypatch.setenv("HADACODE_THREADS", threads)
        got = kernels.pairwise_hamming(rows)
        counts = kernels.pairwise_difference_counts(rows, 10)
        if reference is None:
            reference = (got, counts)
        else:
            assert np.array_equal(got, reference[0])
            assert np.array_equal(counts, reference[1])


def test_negative_entries_reduced_by_modulus(backend):
    rows = [[-1, 5], [2, -4]]
    # -1 = 2, 5 = 2, 2 = 2, -4 = 2 (mod 3): rows coincide after reduction
    assert kernels.pairwise_hamming(np.asarray(rows) % 3).tolist() == [0]
    assert kernels.pairwise_weighted(rows, 3, [0, 1, 1]).tolist() == [0]
    assert kernels.pairwise_difference_counts(rows, 3).tolist() == [[2, 0, 0]]


def test_band_bounds_cover_all_rows():
    for n in (2, 5, 64, 101):
        for workers in (1, 2, 3, 8):
            bounds = kernels._band_bounds(n, workers)
            flat = []
            for s, e in bounds:
                assert s < e
                flat.extend(range(s, e))
            assert flat == list(range(n))


def test_pair_index_round_trip():
    for n in (2, 3, 7, 12):
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        assert [kernels.pair_from_index(n, t) for t in range(len(pairs))] == pairs
    with pytest.raises(IndexError):
        kernels.pair_from_index(3, 3)


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("HADACODE_THREADS", "3")
    assert kernels.worker_count() == 3
    monkeypatch.setenv("HADACODE_THREADS", "0")
    with pytest.raises(ValueError):
        kernels.worker_count()
    monkeypatch.delenv("HADACODE_THREADS")
    assert kernels.worker_count() >= 1


def test_unknown_backend_rejected(monkeypatch):
    monkeypatch.setenv("HADACODE_KERNEL", "fortran")
    with pytest.raises(RuntimeError):
        kernels.backend_name()


def test_shape_validation(backend):
    with pytest.raises(ValueError):
        kernels.pairwise_hamming([1, 2, 3])
    with pytest.raises(ValueError):
        kernels.pairwise_weighted([[0, 1]], 4, [0, 1])
