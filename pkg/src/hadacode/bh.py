"""Butson Hadamard matrices: exact verification over cyclotomic integers.

A matrix of m-th roots of unity H = [zeta^(a_ij)] has H H* = n I exactly when
every off-diagonal row inner product, a sum of roots of unity, vanishes.
Vanishing is decided in Z[x]/Phi_m: the sum's coefficient histogram is
multiplied through the power-basis table and compared with zero, so the test
is a strict integer equality.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import kernels
from .laurent import LaurentPoly, zeta_power_table
from .ph import Modulus, PhMatrix, VerificationReport, as_exponent_rows

__all__ = [
    "BhMatrix",
    "GhReport",
    "BlendReport",
    "bh_verify",
    "bh_normalize",
    "bh_lift",
    "fourier",
    "gh_check",
    "blend_check",
    "bh_search",
]


@dataclass(frozen=True)
class BhMatrix:
    """An order-n matrix over the m-th roots of unity, stored as exponents."""

    n: int
    m: int
    exponents: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = operator.index(self.m)
        if m < 2:
            raise ValueError(f"root order must be >= 2, got {m}")
        exponents = as_exponent_rows(self.exponents)
        if len(exponents) != self.n:
            raise ValueError(f"declared order {self.n} but matrix has {len(exponents)} rows")
        if any(not 0 <= a < m for row in exponents for a in row):
            raise ValueError(f"exponents must lie in [0, {m})")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], m: int) -> "BhMatrix":
        frozen = as_exponent_rows(rows)
        return cls(len(frozen), m, frozen)

    def entry(self, i: int, j: int) -> int:
        return self.exponents[i][j]

    def to_json(self) -> dict:
        return {
            "kind": "bh",
            "n": self.n,
            "m": self.m,
            "exponents": [list(row) for row in self.exponents],
        }

    @classmethod
    def from_json(cls, obj) -> "BhMatrix":
        if not isinstance(obj, dict):
            raise ValueError("matrix JSON must be an object")
        if obj.get("kind") != "bh":
            raise ValueError(f"expected kind 'bh', got {obj.get('kind')!r}")
        for key in ("n", "m", "exponents"):
            if key not in obj:
                raise ValueError(f"matrix JSON missing key {key!r}")
        return cls(obj["n"], obj["m"], as_exponent_rows(obj["exponents"]))


def _root_sum_coords(counts: Sequence[int], table) -> list[int]:
    """Coordinates of sum_e counts[e] * zeta^e over the power basis."""
    deg = len(table[0])
    out = [0] * deg
    for e, c in enumerate(counts):
        if c:
            row = table[e]
            for t in range(deg):
                out[t] += c * row[t]
    return out


def bh_verify(M: BhMatrix) -> VerificationReport:
    """Exact orthogonality check of all row pairs.

    Diagonal inner products are n * zeta^0 = n by construction, so only the
    pairs i < j are computed; their conjugates (j, i) vanish together with
    them because the Galois map zeta -> 1/zeta fixes 0.
    """
    table = zeta_power_table(M.m)
    counts = kernels.pairwise_difference_counts(M.exponents, M.m)
    for idx in range(counts.shape[0]):
        coords = _root_sum_coords(counts[idx].tolist(), table)
        if any(coords):
            i, j = kernels.pair_from_index(M.n, idx)
            return VerificationReport(False, (i, j, LaurentPoly(0, tuple(coords))))
    return VerificationReport(True)


def bh_normalize(M: BhMatrix) -> BhMatrix:
    """Equivalent matrix with all-zero first row and column."""
    a = M.exponents
    rows = tuple(
        tuple((a[i][j] - a[0][j] - a[i][0] + a[0][0]) % M.m for j in range(M.n))
        for i in range(M.n)
    )
    return BhMatrix(M.n, M.m, rows)


def bh_lift(M: BhMatrix) -> PhMatrix:
    """Lift to a monomial matrix over the order-m cyclotomic modulus."""
    return PhMatrix(M.n, M.exponents, Modulus.cyclotomic_product((M.m,)))


def fourier(n: int) -> BhMatrix:
    """Character table of Z_n: exponents a_ij = i*j mod n."""
    n = operator.index(n)
    if n < 2:
        raise ValueError(f"order must be >= 2, got {n}")
    rows = tuple(tuple((i * j) % n for j in range(n)) for i in range(n))
    return BhMatrix(n, n, rows)


@dataclass(frozen=True)
class GhReport:
    is_gh: bool
    failing_divisor: Optional[int]
    checked_divisors: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "is_gh": self.is_gh,
            "failing_divisor": self.failing_divisor,
            "checked_divisors": list(self.checked_divisors),
        }


def gh_check(M: Union[BhMatrix, Sequence[Sequence[int]]], k: Optional[int] = None) -> GhReport:
    """Generalized-Hadamard test over the cyclic group of order k.

    The matrix is one over C_k exactly when its evaluation at a primitive d-th
    root of unity is Butson for every divisor d > 1 of k (vanishing at one
    primitive root forces all conjugates, so one order-d check per divisor
    suffices).
    """
    if isinstance(M, BhMatrix):
        rows = M.exponents
        k = M.m if k is None else k
    else:
        rows = as_exponent_rows(M)
        if k is None:
            raise ValueError("k is required for a raw exponent matrix")
    k = operator.index(k)
    if k < 2:
        raise ValueError(f"group order must be >= 2, got {k}")
    n = len(rows)
    divisors = tuple(d for d in range(2, k + 1) if k % d == 0)
    for d in divisors:
        reduced = tuple(tuple(a % d for a in row) for row in rows)
        if not bh_verify(BhMatrix(n, d, reduced)).ok:
            return GhReport(False, d, divisors)
    return GhReport(True, None, divisors)


@dataclass(frozen=True)
class BlendReport:
    product_is_bh: bool
    sum_is_bh: bool
    product_matrix: Optional[BhMatrix] = None
    sum_matrix: Optional[BhMatrix] = None

    def to_json(self) -> dict:
        return {"product_is_bh": self.product_is_bh, "sum_is_bh": self.sum_is_bh}


def _halved_root_matrix(entries: list[list[list[int]]], m: int) -> Optional[BhMatrix]:
    """Given cyclotomic coordinates per entry, find E with entry = 2 * zeta^E.

    Returns the exponent matrix when every halved entry is an m-th root of
    unity, else None.  Scanning e < m is exact: coordinates are compared as
    integers against twice each table row.
    """
    table = zeta_power_table(m)
    doubled = [tuple(2 * t for t in table[e]) for e in range(m)]
    n = len(entries)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            coords = tuple(entries[i][j])
            for e in range(m):
                if coords == doubled[e]:
                    row.append(e)
                    break
            else:
                return None
        rows.append(tuple(row))
    matrix = BhMatrix(n, m, tuple(rows))
    return matrix


def blend_check(H1: BhMatrix, H2: PhMatrix, h: Optional[int] = None) -> BlendReport:
    """Test whether (H1 . H2(zeta)) / 2 and (H1 + H2(zeta)) / 2 are Butson.

    H2 is evaluated at a primitive h-th root of unity; both blends are formed
    exactly in Z[zeta_h] (the halving is folded into the root-of-unity
    membership test, which compares against 2 * zeta^e).
    """
    if h is None:
        h = H1.m
    if H1.n != H2.n:
        raise ValueError("blend requires matrices of equal order")
    if h != H1.m:
        raise ValueError(f"H1 has root order {H1.m}, expected {h}")
    n = H1.n
    table = zeta_power_table(h)
    b = tuple(tuple(a % h for a in row) for row in H2.exponents)
    a = H1.exponents

    product_entries = []
    for i in range(n):
        row = []
        for j in range(n):
            counts = [0] * h
            for l in range(n):
                counts[(a[i][l] + b[l][j]) % h] += 1
            row.append(_root_sum_coords(counts, table))
        product_entries.append(row)
    sum_entries = [
        [
            [x + y for x, y in zip(table[a[i][j]], table[b[i][j]])]
            for j in range(n)
        ]
        for i in range(n)
    ]

    product_matrix = _halved_root_matrix(product_entries, h)
    sum_matrix = _halved_root_matrix(sum_entries, h)
    if product_matrix is not None and not bh_verify(product_matrix).ok:
        product_matrix = None
    if sum_matrix is not None and not bh_verify(sum_matrix).ok:
        sum_matrix = None
    return BlendReport(
        product_is_bh=product_matrix is not None,
        sum_is_bh=sum_matrix is not None,
        product_matrix=product_matrix,
        sum_matrix=sum_matrix,
    )


def _vanishing_rows(n: int, m: int) -> list[tuple[int, ...]]:
    """All rows (0, r_1, ..., r_{n-1}) over Z_m whose root-of-unity sum is zero,
    in lexicographic order."""
    table = zeta_power_table(m)
    rows = []
    for tail in itertools.product(range(m), repeat=n - 1):
        counts = [0] * m
        counts[0] = 1
        for v in tail:
            counts[v] += 1
        if not any(_root_sum_coords(counts, table)):
            rows.append((0,) + tail)
    return rows


def bh_search(
    n: int, m: int, limit: Optional[int] = None, force: bool = False
) -> list[BhMatrix]:
    """Backtracking enumeration of normalized BH(n, m) matrices.

    Candidates have an all-zero first row and column.  Rows are drawn from the
    precomputed set of rows orthogonal to the all-ones row, and every partial
    choice is checked pairwise before descending.  Results arrive in
    lexicographic order of their row sequences, up to ``limit``.
    """
    n = operator.index(n)
    m = operator.index(m)
    if n < 1 or m < 2:
        raise ValueError(f"need n >= 1 and m >= 2, got n={n}, m={m}")
    if not force and (n > 8 or m > 6):
        raise ValueError(
            f"search space for n={n}, m={m} exceeds the default guard (n <= 8, m <= 6); "
            "pass force=True to override"
        )
    if limit is not None and limit <= 0:
        return []
    if n == 1:
        return [BhMatrix(1, m, ((0,),))]

    table = zeta_power_table(m)
    candidates = _vanishing_rows(n, m)
    ortho_cache: dict[tuple[int, int], bool] = {}

    def orthogonal(i: int, j: int) -> bool:
        key = (i, j) if i <= j else (j, i)
        hit = ortho_cache.get(key)
        if hit is None:
            counts = [0] * m
            for x, y in zip(candidates[i], candidates[j]):
                counts[(x - y) % m] += 1
            hit = not any(_root_sum_coords(counts, table))
            ortho_cache[key] = hit
        return hit

    results: list[BhMatrix] = []
    chosen: list[int] = []

    def extend() -> bool:
        if len(chosen) == n - 1:
            matrix = BhMatrix(
                n, m, ((0,) * n,) + tuple(candidates[i] for i in chosen)
            )
            report = bh_verify(matrix)
            if not report.ok:
                raise AssertionError("search produced a non-orthogonal matrix")
            results.append(matrix)
            return limit is not None and len(results) >= limit
        for idx in range(len(candidates)):
            if all(orthogonal(prev, idx) for prev in chosen):
                chosen.append(idx)
                if extend():
                    return True
                chosen.pop()
        return False

    extend()
    return results
