"""Power Hadamard matrices: matrices of monomials x^a verified in a quotient ring.

A matrix H = [x^(a_ij)] of order n is power Hadamard for a modulus f when
H(x) H(1/x)^T = n I holds modulo f.  Exponent matrices are stored unreduced
(arbitrary integers); reduction happens only inside verification, so shifting
and replacement transforms act on raw exponents.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Optional, Sequence, Union

from .laurent import LaurentPoly, cyclotomic, lp_mod

__all__ = [
    "Modulus",
    "PhMatrix",
    "VerificationReport",
    "NonexistenceReport",
    "ph_verify",
    "exponent_replace",
    "ph_shift",
    "ph_substitute",
    "ph_evaluate",
    "ph_equiv_transform",
    "ph_normalize",
    "ph_kronecker",
    "ph_product_verify",
    "ph_crt_merge",
    "nonexistence_check",
]


def as_exponent_rows(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Validate and freeze a square integer matrix."""
    frozen = tuple(tuple(operator.index(v) for v in row) for row in rows)
    n = len(frozen)
    if n == 0:
        raise ValueError("exponent matrix must be nonempty")
    if any(len(row) != n for row in frozen):
        raise ValueError("exponent matrix must be square")
    return frozen


@dataclass(frozen=True)
class Modulus:
    """Verification modulus: either an explicit polynomial or a product of
    cyclotomic polynomials given by their orders."""

    orders: Optional[tuple[int, ...]] = None
    explicit: Optional[LaurentPoly] = None

    def __post_init__(self):
        if (self.orders is None) == (self.explicit is None):
            raise ValueError("modulus needs exactly one of cyclotomic orders or explicit polynomial")
        if self.orders is not None:
            orders = tuple(operator.index(o) for o in self.orders)
            if not orders or any(o < 1 for o in orders):
                raise ValueError(f"cyclotomic orders must be a nonempty list of positive ints, got {orders}")
            object.__setattr__(self, "orders", orders)
        else:
            if self.explicit.is_zero or len(self.explicit.coeffs) == 1:
                raise ValueError("explicit modulus must have two or more terms")

    @classmethod
    def cyclotomic_product(cls, orders: Sequence[int]) -> "Modulus":
        return cls(orders=tuple(orders))

    @classmethod
    def from_poly(cls, poly: LaurentPoly) -> "Modulus":
        return cls(explicit=poly)

    @property
    def is_cyclotomic(self) -> bool:
        return self.orders is not None

    def poly(self) -> LaurentPoly:
        if self.explicit is not None:
            return self.explicit
        return reduce(lambda acc, o: acc * cyclotomic(o), self.orders, LaurentPoly.one())

    def shifting_number(self) -> int:
        """lcm of the cyclotomic orders; exponent shifts by its multiples
        preserve the power Hadamard property."""
        if self.orders is None:
            raise ValueError("shifting number is defined only for cyclotomic-product moduli")
        return lcm(*self.orders)

    def substituted(self, k: int) -> "Modulus":
        """The modulus with x replaced by x**k, keeping the cyclotomic form
        when possible (order h splits into h*p, plus h when p does not divide h)."""
        if self.explicit is not None:
            return Modulus(explicit=self.explicit.substitute_power(k))
        k = operator.index(k)
        if k < 1:
            raise ValueError(f"substitution power must be >= 1, got {k}")
        orders = list(self.orders)
        rest = k
        p = 2
        while rest > 1:
            if rest % p == 0:
                rest //= p
                split = []
                for o in orders:
                    split.append(o * p)
                    if o % p != 0:
                        split.append(o)
                orders = split
            else:
                p += 1 if p == 2 else 2
        return Modulus(orders=tuple(sorted(orders, reverse=True)))

    def to_json(self) -> dict:
        if self.orders is not None:
            return {"cyclotomic_product": list(self.orders)}
        return {"explicit": self.explicit.to_triples()}

    @classmethod
    def from_json(cls, obj) -> "Modulus":
        if not isinstance(obj, dict) or len(obj) != 1:
            raise ValueError(f"modulus must be an object with one key, got {obj!r}")
        if "cyclotomic_product" in obj:
            return cls(orders=tuple(obj["cyclotomic_product"]))
        if "explicit" in obj:
            return cls(explicit=LaurentPoly.from_triples(obj["explicit"]))
        raise ValueError(f"modulus key must be 'cyclotomic_product' or 'explicit', got {list(obj)}")


def _as_modulus(f: Union["Modulus", LaurentPoly]) -> Modulus:
    if isinstance(f, Modulus):
        return f
    if isinstance(f, LaurentPoly):
        return Modulus(explicit=f)
    raise TypeError(f"expected a Modulus or LaurentPoly, got {type(f).__name__}")


@dataclass(frozen=True)
class PhMatrix:
    """An order-n matrix of monomial entries x^(a_ij) with its modulus."""

    n: int
    exponents: tuple[tuple[int, ...], ...]
    modulus: Modulus

    def __post_init__(self):
        exponents = as_exponent_rows(self.exponents)
        if len(exponents) != self.n:
            raise ValueError(f"declared order {self.n} but matrix has {len(exponents)} rows")
        object.__setattr__(self, "exponents", exponents)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], modulus: Modulus) -> "PhMatrix":
        frozen = as_exponent_rows(rows)
        return cls(len(frozen), frozen, modulus)

    def entry(self, i: int, j: int) -> int:
        return self.exponents[i][j]

    def to_json(self) -> dict:
        return {
            "kind": "ph",
            "n": self.n,
            "modulus": self.modulus.to_json(),
            "exponents": [list(row) for row in self.exponents],
        }

    @classmethod
    def from_json(cls, obj) -> "PhMatrix":
        if not isinstance(obj, dict):
            raise ValueError("matrix JSON must be an object")
        if obj.get("kind") != "ph":
            raise ValueError(f"expected kind 'ph', got {obj.get('kind')!r}")
        for key in ("n", "modulus", "exponents"):
            if key not in obj:
                raise ValueError(f"matrix JSON missing key {key!r}")
        return cls(obj["n"], as_exponent_rows(obj["exponents"]), Modulus.from_json(obj["modulus"]))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a Gram-matrix check; failure is data, not an exception."""

    ok: bool
    first_failure: Optional[tuple[int, int, LaurentPoly]] = None

    def to_json(self) -> dict:
        if self.first_failure is None:
            return {"ok": self.ok, "first_failure": None}
        i, j, residue = self.first_failure
        return {"ok": self.ok, "first_failure": {"i": i, "j": j, "residue": residue.to_triples()}}


def _gram_entry(a: Sequence[int], b: Sequence[int]) -> LaurentPoly:
    # row inner product of H(x) with the conjugate transpose: sum of x^(a_l - b_l)
    terms: dict[int, int] = {}
    for x, y in zip(a, b):
        terms[x - y] = terms.get(x - y, 0) + 1
    return LaurentPoly.from_dict(terms)


def ph_verify(M: PhMatrix, f: Union[Modulus, LaurentPoly, None] = None) -> VerificationReport:
    """Check H(x) H(1/x)^T = n I modulo f, entry by entry.

    All ordered row pairs are scanned: an explicit modulus need not be
    conjugate-symmetric, so the (i, j) and (j, i) residues can differ.
    """
    modulus = _as_modulus(f) if f is not None else M.modulus
    poly = modulus.poly()
    for i in range(M.n):
        for j in range(M.n):
            expected = M.n if i == j else 0
            residue = lp_mod(_gram_entry(M.exponents[i], M.exponents[j]) - expected, poly)
            if not residue.is_zero:
                return VerificationReport(False, (i, j, residue))
    return VerificationReport(True)


def exponent_replace(
    M: PhMatrix, f: Union[Modulus, LaurentPoly, None], i: int, j: int, a_new: int
) -> PhMatrix:
    """Replace one exponent by a congruent one: requires x^old = x^new mod f."""
    modulus = _as_modulus(f) if f is not None else M.modulus
    old = M.exponents[i][j]
    residue = lp_mod(LaurentPoly.monomial(old) - LaurentPoly.monomial(a_new), modulus.poly())
    if not residue.is_zero:
        raise ValueError(
            f"x^{old} and x^{a_new} are not congruent modulo the modulus; residue {residue}"
        )
    rows = [list(row) for row in M.exponents]
    rows[i][j] = a_new
    return replace(M, exponents=as_exponent_rows(rows))


def ph_shift(M: PhMatrix, t: Sequence[Sequence[int]], f: Optional[Modulus] = None) -> PhMatrix:
    """Shift exponents by t_ij * N where N is the modulus shifting number."""
    modulus = f if f is not None else M.modulus
    if not isinstance(modulus, Modulus) or not modulus.is_cyclotomic:
        raise ValueError("shifting requires a cyclotomic-product modulus")
    step = modulus.shifting_number()
    t_rows = as_exponent_rows(t)
    if len(t_rows) != M.n:
        raise ValueError(f"shift matrix must be {M.n}x{M.n}")
    rows = tuple(
        tuple(a + tij * step for a, tij in zip(arow, trow))
        for arow, trow in zip(M.exponents, t_rows)
    )
    return replace(M, exponents=rows)


def ph_substitute(M: PhMatrix, k: int) -> PhMatrix:
    """Replace x by x**k: exponents scale by k, the modulus becomes f(x^k)."""
    k = operator.index(k)
    if k < 1:
        raise ValueError(f"substitution power must be >= 1, got {k}")
    rows = tuple(tuple(a * k for a in row) for row in M.exponents)
    return PhMatrix(M.n, rows, M.modulus.substituted(k))


def ph_evaluate(M: PhMatrix, k: int):
    """Evaluate at a primitive k-th root of unity, yielding a root-of-unity matrix."""
    k = operator.index(k)
    if k < 2:
        raise ValueError(f"evaluation order must be >= 2, got {k}")
    from .bh import BhMatrix

    rows = tuple(tuple(a % k for a in row) for row in M.exponents)
    return BhMatrix(M.n, k, rows)


def _check_permutation(perm: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(operator.index(v) for v in perm)
    if sorted(p) != list(range(n)):
        raise ValueError(f"not a permutation of 0..{n - 1}: {perm!r}")
    return p


def ph_equiv_transform(
    M: PhMatrix,
    row_perm: Optional[Sequence[int]] = None,
    col_perm: Optional[Sequence[int]] = None,
    row_shifts: Optional[Sequence[int]] = None,
    col_shifts: Optional[Sequence[int]] = None,
) -> PhMatrix:
    """Apply a monomial equivalence: permute rows/columns and add per-row and
    per-column exponent shifts.  Every such transform preserves verification.

    Result entry (i, j) is a[row_perm[i]][col_perm[j]] + row_shifts[i] + col_shifts[j].
    """
    n = M.n
    rp = _check_permutation(row_perm, n) if row_perm is not None else tuple(range(n))
    cp = _check_permutation(col_perm, n) if col_perm is not None else tuple(range(n))
    rs = tuple(operator.index(v) for v in row_shifts) if row_shifts is not None else (0,) * n
    cs = tuple(operator.index(v) for v in col_shifts) if col_shifts is not None else (0,) * n
    if len(rs) != n or len(cs) != n:
        raise ValueError(f"shift vectors must have length {n}")
    rows = tuple(
        tuple(M.exponents[rp[i]][cp[j]] + rs[i] + cs[j] for j in range(n)) for i in range(n)
    )
    return replace(M, exponents=rows)


def ph_normalize(M: PhMatrix) -> PhMatrix:
    """Equivalence transform making the first row and column all x^0."""
    a = M.exponents
    rows = tuple(
        tuple(a[i][j] - a[0][j] - a[i][0] + a[0][0] for j in range(M.n)) for i in range(M.n)
    )
    return replace(M, exponents=rows)


def ph_kronecker(A: PhMatrix, B: PhMatrix) -> PhMatrix:
    """Kronecker product; exponents add because x^a * x^b = x^(a+b).

    Both factors must carry the same modulus (compared as polynomials).
    """
    if A.modulus.poly() != B.modulus.poly():
        raise ValueError("Kronecker factors must share one modulus")
    n = A.n * B.n
    rows = tuple(
        tuple(A.exponents[i1][j1] + B.exponents[i2][j2] for j1 in range(A.n) for j2 in range(B.n))
        for i1 in range(A.n)
        for i2 in range(B.n)
    )
    modulus = A.modulus if A.modulus.is_cyclotomic else B.modulus
    return PhMatrix(n, rows, modulus)


def ph_product_verify(
    Ms: Sequence[PhMatrix], f: Union[Modulus, LaurentPoly, None] = None
) -> VerificationReport:
    """Check that G = H_1(x) ... H_k(x) satisfies G G* = n^k I modulo f.

    This is the radical-free form of the scaled product property: dividing by
    sqrt(n^(k-1)) squares away to the integer identity above.
    """
    if not Ms:
        raise ValueError("product of an empty matrix list")
    n = Ms[0].n
    if any(M.n != n for M in Ms):
        raise ValueError("all product factors must have the same order")
    modulus = _as_modulus(f) if f is not None else Ms[0].modulus
    poly = modulus.poly()

    entries = [[LaurentPoly.monomial(a) for a in row] for row in Ms[0].exponents]
    for M in Ms[1:]:
        factor = [[LaurentPoly.monomial(a) for a in row] for row in M.exponents]
        entries = [
            [
                sum((entries[i][l] * factor[l][j] for l in range(n)), LaurentPoly.zero())
                for j in range(n)
            ]
            for i in range(n)
        ]
    target = n ** len(Ms)
    for i in range(n):
        for j in range(n):
            gram = sum(
                (entries[i][l] * entries[j][l].conjugate() for l in range(n)),
                LaurentPoly.zero(),
            )
            expected = target if i == j else 0
            residue = lp_mod(gram - expected, poly)
            if not residue.is_zero:
                return VerificationReport(False, (i, j, residue))
    return VerificationReport(True)


def _single_order(M: PhMatrix, given: Optional[int], name: str) -> int:
    if M.modulus.is_cyclotomic and len(M.modulus.orders) == 1:
        order = M.modulus.orders[0]
        if given is not None and given != order:
            raise ValueError(f"{name}={given} contradicts the matrix modulus order {order}")
        return order
    if given is None:
        raise ValueError(f"cannot infer {name}: matrix modulus is not a single cyclotomic factor")
    return given


def ph_crt_merge(
    A: PhMatrix, B: PhMatrix, h: Optional[int] = None, k: Optional[int] = None
) -> PhMatrix:
    """Merge matrices over the order-h and order-k cyclotomic moduli into one
    over their product.

    Requires gcd(h, k) to divide a_ij - b_ij entrywise; each merged exponent is
    the unique c in [0, lcm(h, k)) with c = a_ij mod h and c = b_ij mod k.
    """
    if A.n != B.n:
        raise ValueError("merge requires matrices of equal order")
    h = _single_order(A, h, "h")
    k = _single_order(B, k, "k")
    d = gcd(h, k)
    period = lcm(h, k)
    inv = pow(h // d, -1, k // d)
    rows = []
    for i in range(A.n):
        row = []
        for j in range(A.n):
            a, b = A.exponents[i][j], B.exponents[i][j]
            if (a - b) % d:
                raise ValueError(
                    f"entry ({i}, {j}): gcd({h}, {k}) = {d} does not divide {a} - {b}"
                )
            t = ((b - a) // d * inv) % (k // d)
            c = (a + h * t) % period
            row.append(c)
        rows.append(tuple(row))
    return PhMatrix(A.n, tuple(rows), Modulus.cyclotomic_product((h, k)))


@dataclass(frozen=True)
class NonexistenceReport:
    """Divisibility screens from evaluating the modulus at 1 and -1.

    The f(1) screen applies to any matrix whenever f(1) is nonzero.  The f(-1)
    screen needs a row or column whose exponents share one parity, and f(-1)
    nonzero.  A screen that applies but fails its divisibility marks the
    (n, f) combination as impossible.
    """

    f1_applies: bool
    f1_divides: bool
    fm1_applies: bool
    fm1_divides: bool

    @property
    def consistent(self) -> bool:
        return not (
            (self.f1_applies and not self.f1_divides)
            or (self.fm1_applies and not self.fm1_divides)
        )

    def to_json(self) -> dict:
        return {
            "f1_applies": self.f1_applies,
            "f1_divides": self.f1_divides,
            "fm1_applies": self.fm1_applies,
            "fm1_divides": self.fm1_divides,
            "consistent": self.consistent,
        }


def _rational_divides(q: Fraction, n: int) -> bool:
    return q != 0 and (Fraction(n) / q).denominator == 1


def _has_parity_line(M: PhMatrix) -> bool:
    for row in M.exponents:
        if len({a % 2 for a in row}) == 1:
            return True
    for j in range(M.n):
        if len({M.exponents[i][j] % 2 for i in range(M.n)}) == 1:
            return True
    return False


def nonexistence_check(
    M: Optional[PhMatrix] = None,
    f: Union[Modulus, LaurentPoly, None] = None,
    n: Optional[int] = None,
) -> NonexistenceReport:
    """Run the f(1) and f(-1) divisibility screens for a matrix or an (n, f) pair."""
    if M is not None:
        modulus = _as_modulus(f) if f is not None else M.modulus
        n = M.n
    else:
        if f is None or n is None:
            raise ValueError("hypothesis-only check needs both f and n")
        modulus = _as_modulus(f)
    poly = modulus.poly()
    at_one = poly(1)
    at_minus_one = poly(-1)
    f1_applies = at_one != 0
    fm1_applies = at_minus_one != 0 and M is not None and _has_parity_line(M)
    return NonexistenceReport(
        f1_applies=f1_applies,
        f1_divides=f1_applies and _rational_divides(at_one, n),
        fm1_applies=fm1_applies,
        fm1_divides=fm1_applies and _rational_divides(at_minus_one, n),
    )
