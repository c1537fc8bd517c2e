"""Tests for exact Laurent-polynomial and cyclotomic-integer arithmetic."""

import doctest
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import hadacode.laurent
from hadacode.laurent import (
    CycloElement,
    LaurentPoly,
    cyclotomic,
    euler_phi,
    lp_conjugate,
    lp_divides,
    lp_mod,
    lp_substitute_power,
    zeta_pow,
    zeta_power_table,
)

X = LaurentPoly.x()


def lp(terms):
    return LaurentPoly.from_dict(terms)


coeffs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)
polys = st.dictionaries(st.integers(-6, 6), coeffs, max_size=6).map(lp)


def test_module_doctests():
    failed, _ = doctest.testmod(hadacode.laurent)
    assert failed == 0


# -- ring structure --------------------------------------------------------


def test_ring_examples():
    assert (1 + X) * (1 - X) == 1 - X**2
    assert LaurentPoly.monomial(-1) * X == LaurentPoly.one()
    assert lp({0: 1, 1: 1, 2: 1}) + lp({0: -1, 1: -1, 2: -1}) == LaurentPoly.zero()


def test_canonical_zero():
    p = lp({3: Fraction(1, 2)}) - lp({3: Fraction(1, 2)})
    assert p.is_zero
    assert p.offset == 0 and p.coeffs == ()


def test_canonical_trimming():
    p = LaurentPoly(-2, (0, 1, 0, 2, 0))
    assert p.offset == -1
    assert p.coeffs == (1, 0, 2)
    assert p.min_exp == -1 and p.max_exp == 1


@given(polys, polys)
def test_mul_degrees(a, b):
    c = a * b
    if a.is_zero or b.is_zero:
        assert c.is_zero
    else:
        assert c.min_exp == a.min_exp + b.min_exp
        assert c.max_exp == a.max_exp + b.max_exp


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a + (-a) == LaurentPoly.zero()
    assert a * LaurentPoly.one() == a


def test_pow():
    assert (1 + X) ** 3 == lp({0: 1, 1: 3, 2: 3, 3: 1})
    assert X**0 == LaurentPoly.one()
    with pytest.raises(ValueError):
        (1 + X) ** -1


def test_evaluate():
    f = lp({-1: 1, 1: 1})
    assert f(2) == Fraction(5, 2)
    assert f(Fraction(1, 2)) == Fraction(5, 2)
    with pytest.raises(ZeroDivisionError):
        f(0)
    assert (X**2 - X + 1)(-1) == 3


# -- conjugation -----------------------------------------------------------


def test_conjugate_examples():
    assert lp_conjugate(1 + X**2) == lp({0: 1, -2: 1})
    assert lp_conjugate(X**5) == LaurentPoly.monomial(-5)
    assert lp_conjugate(LaurentPoly.constant(3)) == LaurentPoly.constant(3)


@given(polys, polys)
def test_conjugate_is_ring_involution(a, b):
    assert lp_conjugate(lp_conjugate(a)) == a
    assert lp_conjugate(a * b) == lp_conjugate(a) * lp_conjugate(b)
    assert lp_conjugate(a + b) == lp_conjugate(a) + lp_conjugate(b)


# -- substitution ----------------------------------------------------------


def test_substitute_power_examples():
    assert lp_substitute_power(lp({0: 1, 1: 1, 2: 1}), 2) == lp({0: 1, 2: 1, 4: 1})
    assert lp_substitute_power(X - 1, 3) == X**3 - 1
    assert lp_substitute_power(lp({-1: 1, 0: 1}), 2) == lp({-2: 1, 0: 1})
    with pytest.raises(ValueError):
        lp_substitute_power(X, 0)


# -- cyclotomic polynomials ------------------------------------------------


def test_cyclotomic_small():
    assert cyclotomic(1) == X - 1
    assert cyclotomic(2) == X + 1
    assert cyclotomic(4) == X**2 + 1
    assert cyclotomic(6) == X**2 - X + 1
    with pytest.raises(ValueError):
        cyclotomic(0)


def test_cyclotomic_against_sympy():
    x = sympy.Symbol("x")
    for k in (1, 2, 3, 8, 12, 15, 36, 105):
        expected = sympy.Poly(sympy.cyclotomic_poly(k, x), x).all_coeffs()[::-1]
        ours = [cyclotomic(k).coefficient(i) for i in range(len(expected))]
        assert ours == expected


def test_cyclotomic_up_to_200():
    for k in range(1, 201):
        p = cyclotomic(k)
        assert p.min_exp == 0
        assert p.max_exp == euler_phi(k)
        assert p.coefficient(p.max_exp) == 1
        assert all(c.denominator == 1 for _, c in p.items())
        product = LaurentPoly.one()
        for d in range(1, k + 1):
            if k % d == 0:
                product = product * cyclotomic(d)
        assert product == X**k - 1


# -- reduction -------------------------------------------------------------


def test_lp_mod_examples():
    f = lp({-2: 1, 0: 1, 2: 1})
    assert lp_mod(f, lp({0: 1, 2: 1, 4: 1})).is_zero
    assert lp_mod(f, lp({0: 1, 1: 1, 2: 1})).is_zero
    g = lp({0: 2, 3: 5})
    assert lp_mod(g, g).is_zero


def test_lp_mod_range_and_units():
    f = lp({-3: 1, 5: Fraction(2, 3)})
    g = cyclotomic(5)
    r = lp_mod(f, g)
    assert r.is_zero or (r.min_exp >= 0 and r.max_exp < 4)
    with pytest.raises(ValueError):
        lp_mod(f, LaurentPoly.monomial(2, 3))
    with pytest.raises(ValueError):
        lp_mod(f, LaurentPoly.zero())


moduli = st.dictionaries(st.integers(-3, 4), coeffs, min_size=2, max_size=5).map(lp).filter(
    lambda p: len(p.coeffs) >= 2
)


@settings(max_examples=60)
@given(polys, moduli)
def test_lp_mod_is_idempotent_and_exact(f, g):
    r = lp_mod(f, g)
    assert lp_mod(r, g) == r
    assert lp_mod(f - r, g).is_zero


@settings(max_examples=60)
@given(polys, polys, moduli)
def test_lp_mod_respects_multiplication(a, b, g):
    direct = lp_mod(a * b, g)
    reduced = lp_mod(lp_mod(a, g) * lp_mod(b, g), g)
    assert direct == reduced


# -- divisibility ----------------------------------------------------------


def test_lp_divides_examples():
    assert lp_divides(cyclotomic(3), lp_substitute_power(cyclotomic(3), 2))
    assert not lp_divides(cyclotomic(4), lp_substitute_power(cyclotomic(4), 2))
    f = lp({-1: 2, 2: 3})
    assert lp_divides(f, f)
    assert lp_divides(f, LaurentPoly.zero())
    with pytest.raises(ValueError):
        lp_divides(LaurentPoly.zero(), f)


def test_cyclotomic_divides_coprime_substitution():
    for h in range(1, 31):
        fh = cyclotomic(h)
        for k in range(1, 31):
            if gcd(h, k) == 1:
                assert lp_divides(fh, lp_substitute_power(fh, k))


# -- cyclotomic integers ---------------------------------------------------


def test_euler_phi_against_sympy():
    for n in range(1, 201):
        assert euler_phi(n) == sympy.totient(n)


def test_zeta_vanishing_sums():
    assert (zeta_pow(3, 1) + zeta_pow(3, 2) + zeta_pow(3, 3)).is_zero
    assert (zeta_pow(9, 3) + zeta_pow(9, 6) + zeta_pow(9, 9)).is_zero
    assert zeta_pow(4, 2).is_integer(-1)
    full = CycloElement.zero(12)
    for e in range(12):
        full = full + zeta_pow(12, e)
    assert full.is_zero


def test_zeta_pow_order_and_additivity():
    for m in (1, 2, 3, 4, 6, 9, 10, 12, 36):
        one = zeta_pow(m, 0)
        assert one.is_integer(1)
        z = zeta_pow(m, 1)
        orders = [e for e in range(1, m + 1) if (z**e).is_integer(1)]
        assert orders[0] == m
        for a in range(m):
            for b in range(m):
                assert zeta_pow(m, a) * zeta_pow(m, b) == zeta_pow(m, a + b)


def test_cyclo_arithmetic_against_minimal_polynomial():
    # zeta_m must be a root of Phi_m evaluated by Horner in Z[zeta_m]
    for m in (5, 8, 9, 12, 36):
        phi = cyclotomic(m)
        z = zeta_pow(m, 1)
        acc = CycloElement.zero(m)
        for e in range(phi.max_exp, -1, -1):
            acc = acc * z + int(phi.coefficient(e))
        assert acc.is_zero


def test_cyclo_order_mismatch_rejected():
    with pytest.raises(ValueError):
        zeta_pow(3, 1) + zeta_pow(4, 1)
    with pytest.raises(ValueError):
        CycloElement(6, (1, 2, 3))


def test_zeta_power_table_shapes():
    for m in (1, 2, 7, 12):
        table = zeta_power_table(m)
        assert len(table) == m
        assert all(len(row) == euler_phi(m) for row in table)


# -- wire format -----------------------------------------------------------


def test_triples_round_trip():
    f = lp({-2: Fraction(-1, 3), 0: 2, 5: Fraction(7, 2)})
    triples = f.to_triples()
    assert triples == [[-2, -1, 3], [0, 2, 1], [5, 7, 2]]
    assert LaurentPoly.from_triples(triples) == f


def test_triples_validation():
    with pytest.raises(ValueError):
        LaurentPoly.from_triples([[0, 1, 1], [0, 2, 1]])
    with pytest.raises(ValueError):
        LaurentPoly.from_triples([[1, 1, 1], [0, 1, 1]])
    with pytest.raises(ValueError):
        LaurentPoly.from_triples([[0, 1, 0]])
    with pytest.raises(ValueError):
        LaurentPoly.from_triples([[0, 1]])


@given(polys)
def test_triples_round_trip_random(f):
    assert LaurentPoly.from_triples(f.to_triples()) == f
