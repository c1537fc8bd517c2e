"""Codes cut from exponent matrices, exact distance scans, and bound checks.

A code here is a finite set of equal-length words over Z_m, usually the rows
of a verified matrix with the constant first coordinate dropped.  Distances
are computed exactly: Hamming by direct disagreement counts, weighted by
rescaling a rational weight table to integers and dividing back out.
"""

import operator
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm
from typing import Optional, Union

import numpy as np

from . import kernels
from .bh import BhMatrix
from .gray import WeightTable, g1, g2, prime_power
from .ph import PhMatrix

__all__ = [
    "Code",
    "DistanceReport",
    "GrayExpansion",
    "MergeDistanceReport",
    "PlotkinReport",
    "RowBoundReport",
    "bh_row_distance_bound",
    "code_from_matrix",
    "equidistant_check",
    "gray_expand",
    "merged_distance_check",
    "min_distance_hamming",
    "min_distance_weighted",
    "plotkin_check",
]


def _rational(value: Union[int, Fraction, str], name: str) -> Fraction:
    if isinstance(value, str):
        value = Fraction(value)
    elif isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise TypeError(f"{name} must be rational, got {type(value).__name__}")
    return value


def _num_json(value: Fraction):
    return int(value) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Code:
    """Pairwise distinct words of one length over Z_m; entries stored in [0, m)."""

    m: int
    length: int
    codewords: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        m = operator.index(self.m)
        if m < 2:
            raise ValueError(f"alphabet modulus must be >= 2, got {m}")
        length = operator.index(self.length)
        if length < 0:
            raise ValueError(f"length must be >= 0, got {length}")
        words = tuple(tuple(operator.index(u) % m for u in word) for word in self.codewords)
        if not words:
            raise ValueError("a code needs at least one codeword")
        for word in words:
            if len(word) != length:
                raise ValueError(f"codeword {word} does not have length {length}")
        if len(set(words)) != len(words):
            raise ValueError("codewords must be pairwise distinct")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "codewords", words)

    @property
    def size(self) -> int:
        return len(self.codewords)


def code_from_matrix(matrix, drop_first: bool = False, m: Optional[int] = None) -> Code:
    """Rows of an exponent matrix as codewords.

    Accepts a root-of-unity matrix (alphabet = its root order), a monomial
    matrix over a cyclotomic-product modulus (alphabet = its shifting number),
    or raw rows with an explicit modulus.  ``drop_first`` deletes the constant
    first coordinate and insists it is actually constant zero.
    """
    if isinstance(matrix, BhMatrix):
        mm, rows = matrix.m, matrix.exponents
    elif isinstance(matrix, PhMatrix):
        mm = matrix.modulus.shifting_number()
        rows = tuple(tuple(a % mm for a in row) for row in matrix.exponents)
    else:
        if m is None:
            raise ValueError("raw exponent rows need an explicit modulus m")
        mm = operator.index(m)
        rows = tuple(tuple(operator.index(a) % mm for a in row) for row in matrix)
        if not rows:
            raise ValueError("need at least one row")
    if drop_first:
        if any(not row for row in rows):
            raise ValueError("cannot drop the first coordinate of empty rows")
        if any(row[0] for row in rows):
            raise ValueError("drop_first needs an all-zero first column; normalize first")
        rows = tuple(row[1:] for row in rows)
    return Code(mm, len(rows[0]), rows)


@dataclass(frozen=True)
class DistanceReport:
    """Minimum pairwise distance plus the full distance multiset.

    ``argmin_pair`` is the lexicographically first minimizing pair and
    ``equidistant`` says whether every pair sits at the same distance.
    """

    min_distance: Fraction
    argmin_pair: tuple[int, int]
    equidistant: bool
    distance_multiset_summary: dict

    def to_json(self) -> dict:
        return {
            "min_distance": _num_json(self.min_distance),
            "argmin_pair": list(self.argmin_pair),
            "equidistant": self.equidistant,
            "distance_multiset_summary": {
                str(_num_json(d)): c for d, c in self.distance_multiset_summary.items()
            },
        }


def _build_report(dists: np.ndarray, n: int, scale: int) -> DistanceReport:
    counts = Counter(int(v) for v in dists)
    summary = {Fraction(v, scale): c for v, c in sorted(counts.items())}
    best = int(np.argmin(dists))
    return DistanceReport(
        min_distance=Fraction(int(dists[best]), scale),
        argmin_pair=kernels.pair_from_index(n, best),
        equidistant=len(counts) == 1,
        distance_multiset_summary=summary,
    )


def _distance_rows(rows):
    if isinstance(rows, Code):
        return rows.codewords
    return tuple(tuple(operator.index(u) for u in row) for row in rows)


def min_distance_hamming(rows) -> DistanceReport:
    """Exact pairwise Hamming scan over a code or raw integer rows.

    Raw rows are compared entry by entry as given; reduce them first if two
    integers should count as the same residue.
    """
    mat = _distance_rows(rows)
    if len(mat) < 2:
        raise ValueError("need at least two rows")
    return _build_report(kernels.pairwise_hamming(mat), len(mat), 1)


def min_distance_weighted(code: Code, w: WeightTable) -> DistanceReport:
    """Exact pairwise scan of sum-of-weights of entrywise differences mod m."""
    if not isinstance(code, Code):
        raise TypeError("min_distance_weighted needs a Code")
    if not isinstance(w, WeightTable):
        raise TypeError("min_distance_weighted needs a WeightTable")
    if w.m != code.m:
        raise ValueError(f"weight table modulus {w.m} differs from code modulus {code.m}")
    if code.size < 2:
        raise ValueError("need at least two codewords")
    scale = 1
    for v in w.values:
        scale = lcm(scale, v.denominator)
    weights = [int(v * scale) for v in w.values]
    dists = kernels.pairwise_weighted(code.codewords, code.m, weights)
    return _build_report(dists, code.size, scale)


@dataclass(frozen=True)
class GrayExpansion:
    """Digit-image matrix of an exponent matrix: n rows of length n * p^(k-1)."""

    p: int
    k: int
    rows: tuple[tuple[int, ...], ...]


def gray_expand(M: BhMatrix, gray_map: str) -> GrayExpansion:
    """Replace every exponent of a BH(n, p^k) matrix by its digit vector.

    ``gray_map`` selects the affine map ("g1") or the unary map ("g2", odd p
    only).  The root order must be a prime power p^k with k >= 2.
    """
    if not isinstance(M, BhMatrix):
        raise TypeError("gray_expand needs a root-of-unity exponent matrix")
    func = {"g1": g1, "g2": g2}.get(gray_map)
    if func is None:
        raise ValueError(f"unknown gray map {gray_map!r}; use 'g1' or 'g2'")
    p, k = prime_power(M.m)
    rows = tuple(
        tuple(d for u in row for d in func(u, p, k).digits) for row in M.exponents
    )
    return GrayExpansion(p, k, rows)


@dataclass(frozen=True)
class PlotkinReport:
    """Verdict of the average-weight size bound M <= d / (d - gamma * n).

    ``vacuous`` flags d <= gamma * n, where the bound says nothing; ``meets``
    says the size hits the floor of the bound, ``optimal`` that no code one
    word larger fits under it.
    """

    bound: Optional[Fraction]
    meets: bool
    optimal: bool
    vacuous: bool

    def to_json(self) -> dict:
        return {
            "bound": None if self.bound is None else _num_json(self.bound),
            "meets": self.meets,
            "optimal": self.optimal,
            "vacuous": self.vacuous,
        }


def plotkin_check(m_size, d, gamma, length) -> PlotkinReport:
    """Check a size M, distance d, length n code against M <= d/(d - gamma*n)."""
    m_size = operator.index(m_size)
    length = operator.index(length)
    if m_size < 1:
        raise ValueError(f"code size must be >= 1, got {m_size}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    d = _rational(d, "d")
    gamma = _rational(gamma, "gamma")
    if d < 0 or gamma < 0:
        raise ValueError("d and gamma must be nonnegative")
    denom = d - gamma * length
    if denom <= 0:
        return PlotkinReport(bound=None, meets=False, optimal=False, vacuous=True)
    bound = d / denom
    meets = m_size == floor(bound) and m_size <= bound
    return PlotkinReport(bound=bound, meets=meets, optimal=m_size > bound - 1, vacuous=False)


@dataclass(frozen=True)
class RowBoundReport:
    """Distance of raw exponent rows against the bound n - n/l.

    l is the smallest prime divisor of the root order: a vanishing sum of
    m-th roots needs at least l terms, so two rows can agree in at most n/l
    places.
    """

    l: int
    bound: Fraction
    d: int
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "bound": _num_json(self.bound),
            "d": self.d,
            "satisfied": self.satisfied,
        }


def bh_row_distance_bound(M: BhMatrix) -> RowBoundReport:
    """Minimum Hamming distance of full exponent rows versus n - n/l."""
    if not isinstance(M, BhMatrix):
        raise TypeError("bh_row_distance_bound needs a root-of-unity exponent matrix")
    if M.m < 3:
        raise ValueError(f"the row distance bound needs root order >= 3, got {M.m}")
    if M.n < 2:
        raise ValueError("need at least two rows")
    l = next(c for c in range(2, M.m + 1) if M.m % c == 0)
    report = min_distance_hamming(M.exponents)
    bound = M.n - Fraction(M.n, l)
    return RowBoundReport(
        l=l, bound=bound, d=int(report.min_distance), satisfied=report.min_distance >= bound
    )


@dataclass(frozen=True)
class MergeDistanceReport:
    """Code distances of two matrices and their congruence merge."""

    d1: int
    d2: int
    d: int
    satisfied: bool

    def to_json(self) -> dict:
        return {"d1": self.d1, "d2": self.d2, "d": self.d, "satisfied": self.satisfied}


def _first_line_zero(M: PhMatrix, mod: int) -> bool:
    rows = M.exponents
    return all(a % mod == 0 for a in rows[0]) and all(row[0] % mod == 0 for row in rows)


def merged_distance_check(A: PhMatrix, B: PhMatrix, C: PhMatrix) -> MergeDistanceReport:
    """Compare the merged code distance against both input code distances.

    All three matrices must be normalized and C must reduce to A and B
    entrywise modulo their shifting numbers.  Distances are Hamming minima of
    the exponent rows with the first coordinate dropped.
    """
    for M in (A, B, C):
        if not isinstance(M, PhMatrix):
            raise TypeError("merged_distance_check needs monomial matrices")
    if not A.n == B.n == C.n:
        raise ValueError("matrices must share one order")
    if A.n < 2:
        raise ValueError("need at least two rows")
    h = A.modulus.shifting_number()
    k = B.modulus.shifting_number()
    big = C.modulus.shifting_number()
    for M, mod, label in ((A, h, "first"), (B, k, "second"), (C, big, "merged")):
        if not _first_line_zero(M, mod):
            raise ValueError(f"the {label} matrix is not normalized")
    for i in range(C.n):
        for j in range(C.n):
            c = C.exponents[i][j]
            if (c - A.exponents[i][j]) % h or (c - B.exponents[i][j]) % k:
                raise ValueError(
                    f"entry ({i}, {j}) of the merged matrix does not reduce to the inputs"
                )
    d1 = int(min_distance_hamming(code_from_matrix(A, drop_first=True)).min_distance)
    d2 = int(min_distance_hamming(code_from_matrix(B, drop_first=True)).min_distance)
    d = int(min_distance_hamming(code_from_matrix(C, drop_first=True)).min_distance)
    return MergeDistanceReport(d1=d1, d2=d2, d=d, satisfied=d >= max(d1, d2))


def equidistant_check(code: Code, w: WeightTable) -> bool:
    """True when all pairwise distances agree and all nonzero words weigh the same."""
    report = min_distance_weighted(code, w)
    if not report.equidistant:
        return False
    weights = {
        sum((w(u) for u in word), Fraction(0)) for word in code.codewords if any(word)
    }
    return len(weights) <= 1
