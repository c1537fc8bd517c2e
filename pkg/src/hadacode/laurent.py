"""Exact arithmetic for rational Laurent polynomials and cyclotomic integers.

Everything downstream (matrix verification, Gray weights, distance bounds)
reduces to equality tests in one of two rings implemented here:

* ``LaurentPoly``: Q[x, 1/x] with `fractions.Fraction` coefficients, plus
  reduction modulo an ordinary polynomial (`lp_mod`).
* ``CycloElement``: Z[zeta_m] as integer coordinate vectors over the power
  basis of Z[x]/Phi_m.

No floating point is used anywhere; all checks are tolerance-free.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "LaurentPoly",
    "CycloElement",
    "lp_conjugate",
    "lp_substitute_power",
    "lp_mod",
    "lp_divides",
    "cyclotomic",
    "euler_phi",
    "zeta_pow",
    "zeta_power_table",
]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction coefficient, got {type(value).__name__}")


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """A Laurent polynomial over Q in one variable.

    ``coeffs[i]`` is the coefficient of ``x**(offset + i)``.  The stored form
    is canonical: the zero polynomial is ``(offset=0, coeffs=())`` and
    otherwise the first and last coefficients are nonzero, so structural
    equality coincides with mathematical equality.

    >>> x = LaurentPoly.x()
    >>> print((1 + x) * (1 - x))
    1 - x^2
    >>> print(LaurentPoly.monomial(-1) * x)
    1
    """

    offset: int = 0
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        coeffs = [_as_fraction(c) for c in self.coeffs]
        offset = operator.index(self.offset)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            offset += 1
        if not coeffs:
            offset = 0
        object.__setattr__(self, "offset", offset)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.constant(1)

    @classmethod
    def x(cls) -> "LaurentPoly":
        return cls.monomial(1)

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentPoly":
        return cls(0, (_as_fraction(value),))

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "LaurentPoly":
        """Return ``coefficient * x**exponent``; the exponent may be negative."""
        return cls(exponent, (_as_fraction(coefficient),))

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls.zero()
        low = min(terms)
        coeffs = [Fraction(0)] * (max(terms) - low + 1)
        for exp, coeff in terms.items():
            coeffs[exp - low] += _as_fraction(coeff)
        return cls(low, tuple(coeffs))

    @classmethod
    def from_triples(cls, triples: Sequence[Sequence[int]]) -> "LaurentPoly":
        """Parse the wire format: a list of [exponent, numerator, denominator].

        Exponents must be strictly increasing and denominators nonzero.
        """
        terms = {}
        previous = None
        for item in triples:
            if len(item) != 3:
                raise ValueError(f"polynomial term must be [exp, num, den], got {item!r}")
            exp, num, den = (operator.index(v) for v in item)
            if den == 0:
                raise ValueError("polynomial term has zero denominator")
            if previous is not None and exp <= previous:
                raise ValueError("polynomial term exponents must be strictly increasing")
            previous = exp
            terms[exp] = Fraction(num, den)
        return cls.from_dict(terms)

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return self.offset

    @property
    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no exponents")
        return self.offset + len(self.coeffs) - 1

    def items(self) -> Iterator[tuple[int, Fraction]]:
        for i, coeff in enumerate(self.coeffs):
            if coeff:
                yield self.offset + i, coeff

    def coefficient(self, exponent: int) -> Fraction:
        i = exponent - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def to_triples(self) -> list[list[int]]:
        return [[e, c.numerator, c.denominator] for e, c in self.items()]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        if not self.coeffs:
            return hash(0)
        if self.offset == 0 and len(self.coeffs) == 1:
            return hash(self.coeffs[0])
        return hash((self.offset, self.coeffs))

    # -- ring operations ---------------------------------------------------

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.offset, tuple(-c for c in self.coeffs))

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        low = min(self.offset, other.offset)
        high = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        coeffs = [Fraction(0)] * (high - low)
        for i, c in enumerate(self.coeffs):
            coeffs[self.offset - low + i] += c
        for i, c in enumerate(other.coeffs):
            coeffs[other.offset - low + i] += c
        return LaurentPoly(low, tuple(coeffs))

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return LaurentPoly.zero()
        coeffs = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    coeffs[i + j] += a * b
        return LaurentPoly(self.offset + other.offset, tuple(coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        n = operator.index(n)
        if n < 0:
            raise ValueError("negative powers are not defined for general Laurent polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- Laurent-specific maps ---------------------------------------------

    def conjugate(self) -> "LaurentPoly":
        """Substitute 1/x for x, i.e. negate every exponent."""
        if self.is_zero:
            return self
        return LaurentPoly(-(self.offset + len(self.coeffs) - 1), tuple(reversed(self.coeffs)))

    def substitute_power(self, k: int) -> "LaurentPoly":
        """Substitute x**k for x; requires k >= 1."""
        k = operator.index(k)
        if k < 1:
            raise ValueError(f"substitution power must be >= 1, got {k}")
        return LaurentPoly.from_dict({e * k: c for e, c in self.items()})

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at an exact rational point."""
        value = _as_fraction(value)
        if self.is_zero:
            return Fraction(0)
        if value == 0 and self.offset < 0:
            raise ZeroDivisionError("cannot evaluate negative exponents at 0")
        return sum((c * value ** e for e, c in self.items()), Fraction(0))

    # -- presentation ------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                mag = abs(c)
                head = "" if mag == 1 else f"{mag}*"
                body = f"{head}x" if e == 1 else f"{head}x^{e}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value)
    return NotImplemented


def lp_conjugate(f: LaurentPoly) -> LaurentPoly:
    """Return f(1/x)."""
    return f.conjugate()


def lp_substitute_power(f: LaurentPoly, k: int) -> LaurentPoly:
    """Return f(x**k) for k >= 1."""
    return f.substitute_power(k)


def _dense(p: LaurentPoly) -> list[Fraction]:
    """Coefficient list indexed by exponent; p must have no negative exponents."""
    if p.is_zero:
        return []
    if p.offset < 0:
        raise ValueError("polynomial has negative exponents")
    out = [Fraction(0)] * (p.offset + len(p.coeffs))
    for e, c in p.items():
        out[e] = c
    return out


def _poly_divmod(a: LaurentPoly, b: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Long division of ordinary polynomials: a = q*b + r with deg r < deg b."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _dense(a)
    div = _dense(b)
    dq = len(rem) - len(div)
    if dq < 0:
        return LaurentPoly.zero(), a
    quot = [Fraction(0)] * (dq + 1)
    lead = div[-1]
    for i in range(dq, -1, -1):
        factor = rem[i + len(div) - 1] / lead
        if factor:
            quot[i] = factor
            for j, c in enumerate(div):
                rem[i + j] -= factor * c
    return LaurentPoly(0, tuple(quot)), LaurentPoly(0, tuple(rem[: len(div) - 1]))


def _unit_normalize(modulus: LaurentPoly) -> LaurentPoly:
    """Shift a modulus by a power of x to an ordinary polynomial with g(0) != 0.

    Multiplying by the unit x**k does not change the ideal in Q[x, 1/x], so
    reduction modulo the result agrees with reduction modulo the input.
    """
    if modulus.is_zero or len(modulus.coeffs) == 1:
        raise ValueError("modulus must have two or more terms; units give a degenerate quotient")
    return LaurentPoly(0, modulus.coeffs)


def _x_inverse_mod(g: LaurentPoly) -> LaurentPoly:
    # from g = c0 + c1 x + ... + cd x^d with c0 != 0: x^-1 = -(c1 + ... + cd x^{d-1}) / c0
    dense = _dense(g)
    c0 = dense[0]
    return LaurentPoly(0, tuple(-c / c0 for c in dense[1:]))


def lp_mod(f: LaurentPoly, modulus: LaurentPoly) -> LaurentPoly:
    """Canonical representative of f in Q[x, 1/x] modulo the given polynomial.

    The modulus is first normalized by a unit to an ordinary polynomial g with
    nonzero constant term; negative exponents of f are cleared by multiplying
    with the inverse of x modulo g.  The result has exponents in [0, deg g).

    >>> f = LaurentPoly.from_dict({-2: 1, 0: 1, 2: 1})
    >>> lp_mod(f, LaurentPoly.from_dict({0: 1, 2: 1, 4: 1})).is_zero
    True
    >>> lp_mod(f, LaurentPoly.from_dict({0: 1, 1: 1, 2: 1})).is_zero
    True
    """
    g = _unit_normalize(modulus)
    if f.is_zero:
        return f
    shift = min(f.offset, 0)
    ordinary = f if shift == 0 else LaurentPoly(f.offset - shift, f.coeffs)
    result = _poly_divmod(ordinary, g)[1]
    if shift:
        inv = _x_inverse_mod(g)
        power = LaurentPoly.one()
        n = -shift
        while n:
            if n & 1:
                power = _poly_divmod(power * inv, g)[1]
            inv = _poly_divmod(inv * inv, g)[1]
            n >>= 1
        result = _poly_divmod(result * power, g)[1]
    return result


def lp_divides(f: LaurentPoly, g: LaurentPoly) -> bool:
    """True iff g is a multiple of f in the Laurent ring; f must be nonzero."""
    if f.is_zero:
        raise ValueError("divisibility by the zero polynomial is undefined")
    if g.is_zero:
        return True
    if len(f.coeffs) == 1:
        return True
    return lp_mod(g, f).is_zero


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> LaurentPoly:
    """The k-th cyclotomic polynomial, by exact division of x^k - 1.

    Uses the quotient identity Phi_k(x) = (x^k - 1) / prod_{d | k, d < k} Phi_d(x).

    >>> print(cyclotomic(1))
    -1 + x
    >>> print(cyclotomic(6))
    1 - x + x^2
    >>> print(cyclotomic(9))
    1 + x^3 + x^6
    """
    k = operator.index(k)
    if k < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {k}")
    numerator = LaurentPoly.monomial(k) - 1
    for d in _divisors(k)[:-1]:
        numerator, rem = _poly_divmod(numerator, cyclotomic(d))
        if not rem.is_zero:
            raise AssertionError("cyclotomic quotient identity produced a remainder")
    return numerator


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient, via trial-division factorization."""
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"totient argument must be >= 1, got {n}")
    result = n
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1 if p == 2 else 2
    if rest > 1:
        result -= result // rest
    return result


@lru_cache(maxsize=None)
def zeta_power_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Coordinates of 1, zeta, ..., zeta^{m-1} over the power basis of Z[x]/Phi_m.

    Row e gives the integer coordinates of zeta_m**e; exponents reduce modulo m
    because x^m = 1 holds in the quotient.
    """
    phi = cyclotomic(m)
    deg = phi.max_exp
    mod = [int(c) for c in _dense(phi)]
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(m):
        rows.append(tuple(cur))
        top = cur[-1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * mod[i]
        cur = nxt
    return tuple(rows)


@dataclass(frozen=True)
class CycloElement:
    """An element of Z[zeta_m], stored as integer coordinates over the power basis.

    ``coeffs`` has length Euler-phi(m) and entry i is the coordinate of
    zeta_m**i.  Construction with a wrong-length vector is rejected, so sums
    and products of elements of equal order are always well formed.

    >>> (zeta_pow(3, 0) + zeta_pow(3, 1) + zeta_pow(3, 2)).is_zero
    True
    >>> zeta_pow(4, 2).is_integer(-1)
    True
    """

    order: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        order = operator.index(self.order)
        if order < 1:
            raise ValueError(f"cyclotomic order must be >= 1, got {order}")
        coeffs = tuple(operator.index(c) for c in self.coeffs)
        if len(coeffs) != euler_phi(order):
            raise ValueError(
                f"coordinate vector for order {order} must have length {euler_phi(order)}, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, m: int) -> "CycloElement":
        return cls(m, (0,) * euler_phi(m))

    @classmethod
    def from_int(cls, m: int, value: int) -> "CycloElement":
        coeffs = [0] * euler_phi(m)
        coeffs[0] = operator.index(value)
        return cls(m, tuple(coeffs))

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self, value: int) -> bool:
        """True iff this element equals the rational integer ``value``."""
        if self.coeffs[0] != value:
            return False
        return not any(self.coeffs[1:])

    def _check_order(self, other: "CycloElement"):
        if self.order != other.order:
            raise ValueError(f"mixed cyclotomic orders {self.order} and {other.order}")

    def __add__(self, other) -> "CycloElement":
        if isinstance(other, int):
            other = CycloElement.from_int(self.order, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check_order(other)
        return CycloElement(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other) -> "CycloElement":
        if isinstance(other, int):
            other = CycloElement.from_int(self.order, other)
        if not isinstance(other, CycloElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "CycloElement":
        return (-self) + other

    def __mul__(self, other) -> "CycloElement":
        if isinstance(other, int):
            return CycloElement(self.order, tuple(other * a for a in self.coeffs))
        if not isinstance(other, CycloElement):
            return NotImplemented
        self._check_order(other)
        deg = len(self.coeffs)
        prod = [0] * (2 * deg - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] += a * b
        table = zeta_power_table(self.order)
        out = [0] * deg
        for e, c in enumerate(prod):
            if c:
                row = table[e % self.order]
                for i in range(deg):
                    out[i] += c * row[i]
        return CycloElement(self.order, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycloElement":
        n = operator.index(n)
        if n < 0:
            raise ValueError("negative powers of cyclotomic integers are not supported")
        result = CycloElement.from_int(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result


def zeta_pow(m: int, e: int) -> CycloElement:
    """The canonical representative of zeta_m**e; the exponent reduces mod m."""
    return CycloElement(m, zeta_power_table(m)[e % m])
