"""Gray maps from Z_{p^k} to vectors over Z_p, and the weight theory behind them.

Two maps are provided: ``g1`` tabulates an affine form over all points of
Z_p^{k-1} (its weight ``w1`` is homogeneous), and ``g2`` writes the element in
a unary-with-carry form (its weight ``w2`` is not homogeneous, which
``homogeneous_check`` detects with an explicit witness).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Union

__all__ = [
    "GrayImage",
    "WeightTable",
    "HomogeneityReport",
    "g1",
    "w1",
    "g2",
    "w2",
    "w1_table",
    "w2_table",
    "lee_table",
    "hamming_table",
    "homogeneous_check",
    "gamma_average",
    "is_prime",
    "prime_power",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1 if d == 2 else 2
    return True


def prime_power(m: int) -> tuple[int, int]:
    """Write m = p^k with p prime and k >= 1, or raise ValueError."""
    m = operator.index(m)
    if m < 2:
        raise ValueError(f"{m} is not a prime power")
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            rest = m
            while rest % p == 0:
                rest //= p
                k += 1
            if rest != 1:
                raise ValueError(f"{m} is not a prime power")
            return p, k
        p += 1 if p == 2 else 2
    return m, 1


def _check_args(u: int, p: int, k: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 0 <= u < p**k:
        raise ValueError(f"u must lie in [0, {p**k}), got {u}")


@dataclass(frozen=True)
class GrayImage:
    """A vector over Z_p of length p^(k-1), the image of one ring element."""

    p: int
    digits: tuple[int, ...]

    def hamming_weight(self) -> int:
        return sum(1 for d in self.digits if d)

    def __add__(self, other: "GrayImage") -> "GrayImage":
        if not isinstance(other, GrayImage):
            return NotImplemented
        if self.p != other.p or len(self.digits) != len(other.digits):
            raise ValueError("mismatched Gray images")
        return GrayImage(self.p, tuple((a + b) % self.p for a, b in zip(self.digits, other.digits)))


def g1(u: int, p: int, k: int) -> GrayImage:
    """Affine truth-table map: evaluate u_k + sum u_i y_i over all y in Z_p^(k-1).

    The base-p digits of u are u_1 (least significant) through u_k; the points
    y are enumerated with y_1 varying fastest.

    >>> g1(6, 2, 3).digits
    (1, 1, 0, 0)
    """
    _check_args(u, p, k)
    digits = []
    rest = u
    for _ in range(k):
        digits.append(rest % p)
        rest //= p
    constant = digits[-1]
    coeffs = digits[:-1]
    out = []
    for t in range(p ** (k - 1)):
        value = constant
        point = t
        for c in coeffs:
            value += c * (point % p)
            point //= p
        out.append(value % p)
    return GrayImage(p, tuple(out))


def w1(u: int, p: int, k: int) -> int:
    """Hamming weight of g1(u): 0 at zero, p^(k-1) on the other multiples of
    p^(k-1), and p^(k-1) - p^(k-2) everywhere else."""
    _check_args(u, p, k)
    if u == 0:
        return 0
    if u % p ** (k - 1) == 0:
        return p ** (k - 1)
    return p ** (k - 1) - p ** (k - 2)


def g2(u: int, p: int, k: int) -> GrayImage:
    """Unary-with-carry map for odd p: u ones for small u, then a constant
    offset plus a shorter unary block.

    For u <= p^(k-1) the image has ones in the first u places.  Otherwise
    write u = q * p^(k-1) + r with 1 <= r <= p^(k-1); the image is the
    constant vector q plus the image of r, coordinatewise mod p.

    >>> g2(8, 3, 2).digits
    (0, 0, 2)
    """
    _check_args(u, p, k)
    if p == 2:
        raise ValueError("this map needs an odd prime")
    block = p ** (k - 1)
    if u <= block:
        return GrayImage(p, tuple(1 if t < u else 0 for t in range(block)))
    q, r = divmod(u - 1, block)
    r += 1
    return GrayImage(p, tuple((q + (1 if t < r else 0)) % p for t in range(block)))


def w2(u: int, p: int, k: int) -> int:
    """Hamming weight of g2(u): u, then a plateau at p^(k-1), then p^k - u."""
    _check_args(u, p, k)
    if p == 2:
        raise ValueError("this weight needs an odd prime")
    block = p ** (k - 1)
    if u <= block:
        return u
    if u <= p**k - block:
        return block
    return p**k - u


def _as_weight(value: Union[int, Fraction, str]) -> Fraction:
    if isinstance(value, str):
        value = Fraction(value)
    if isinstance(value, int):
        value = Fraction(value)
    if not isinstance(value, Fraction):
        raise TypeError(f"weight values must be rational, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"weight values must be nonnegative, got {value}")
    return value


@dataclass(frozen=True)
class WeightTable:
    """Weights w(0), ..., w(m-1) on Z_m, with w(0) = 0."""

    m: int
    values: tuple[Fraction, ...]

    def __post_init__(self):
        m = operator.index(self.m)
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        values = tuple(_as_weight(v) for v in self.values)
        if len(values) != m:
            raise ValueError(f"need {m} weight values, got {len(values)}")
        if values[0] != 0:
            raise ValueError("w(0) must be 0")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "values", values)

    def __call__(self, u: int) -> Fraction:
        return self.values[u % self.m]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "values": [
                int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
                for v in self.values
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "WeightTable":
        if not isinstance(obj, dict) or "m" not in obj or "values" not in obj:
            raise ValueError("weight table JSON needs keys 'm' and 'values'")
        return cls(obj["m"], tuple(_as_weight(v) for v in obj["values"]))


def w1_table(p: int, k: int) -> WeightTable:
    return WeightTable(p**k, tuple(Fraction(w1(u, p, k)) for u in range(p**k)))


def w2_table(p: int, k: int) -> WeightTable:
    return WeightTable(p**k, tuple(Fraction(w2(u, p, k)) for u in range(p**k)))


def lee_table(m: int) -> WeightTable:
    return WeightTable(m, tuple(Fraction(min(u, m - u)) for u in range(m)))


def hamming_table(m: int) -> WeightTable:
    return WeightTable(m, (Fraction(0),) + (Fraction(1),) * (m - 1))


@dataclass(frozen=True)
class HomogeneityReport:
    """Outcome of the two-condition homogeneity test.

    Condition (1): elements generating the same principal ideal have equal
    weight; a violation is reported as the pair (x, representative).
    Condition (2): every nonzero principal ideal has the same average weight
    gamma; a violation is reported as the offending generator.
    """

    is_homogeneous: bool
    gamma: Optional[Fraction] = None
    witness: Union[tuple[int, int], int, None] = None

    def to_json(self) -> dict:
        gamma = None
        if self.gamma is not None:
            gamma = (
                int(self.gamma)
                if self.gamma.denominator == 1
                else f"{self.gamma.numerator}/{self.gamma.denominator}"
            )
        witness = self.witness
        if isinstance(witness, tuple):
            witness = list(witness)
        return {"is_homogeneous": self.is_homogeneous, "gamma": gamma, "witness": witness}


def homogeneous_check(w: WeightTable) -> HomogeneityReport:
    """Decide whether a weight table is homogeneous on Z_m.

    Two elements generate the same ideal exactly when they share a gcd with m,
    so each nonzero x is compared against the largest generator of its class
    (condition 1), and each class average is compared against a common gamma
    (condition 2).
    """
    m = w.m
    rep_of: dict[int, int] = {}
    for x in range(1, m):
        rep_of[gcd(x, m)] = max(rep_of.get(gcd(x, m), 0), x)
    for x in range(1, m):
        rep = rep_of[gcd(x, m)]
        if w.values[x] != w.values[rep]:
            return HomogeneityReport(False, None, (x, rep))
    gamma = None
    for x in range(1, m):
        g = gcd(x, m)
        if x != min(y for y in range(1, m) if gcd(y, m) == g):
            continue
        ideal = range(0, m, g)
        average = sum((w.values[y] for y in ideal), Fraction(0)) * g / m
        if gamma is None:
            gamma = average
        elif average != gamma:
            return HomogeneityReport(False, None, x)
    return HomogeneityReport(True, gamma, None)


def gamma_average(w: WeightTable) -> Fraction:
    """Average weight over the whole ring."""
    return sum(w.values, Fraction(0)) / w.m
