"""Tests for the two Gray maps, their weights, and homogeneity checking."""

from fractions import Fraction

import pytest

from hadacode.gray import (
    GrayImage,
    WeightTable,
    g1,
    g2,
    gamma_average,
    hamming_table,
    homogeneous_check,
    is_prime,
    lee_table,
    prime_power,
    w1,
    w1_table,
    w2,
    w2_table,
)

W1_CASES = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)]
W2_CASES = [(3, 2), (3, 3), (5, 2)]


# -- prime utilities -------------------------------------------------------


def test_is_prime_small_values():
    primes = [p for p in range(40) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


@pytest.mark.parametrize("m,expected", [(9, (3, 2)), (8, (2, 3)), (7, (7, 1)), (25, (5, 2))])
def test_prime_power_factors(m, expected):
    assert prime_power(m) == expected


@pytest.mark.parametrize("m", [0, 1, 6, 12, 36])
def test_prime_power_rejects_non_prime_powers(m):
    with pytest.raises(ValueError):
        prime_power(m)


# -- affine map g1 ---------------------------------------------------------


def test_g1_point_values_mod8():
    assert g1(6, 2, 3).digits == (1, 1, 0, 0)
    assert g1(0, 2, 3).digits == (0, 0, 0, 0)


def test_g1_truth_table_mod4():
    images = [g1(u, 2, 2).digits for u in range(4)]
    assert images == [(0, 0), (0, 1), (1, 1), (1, 0)]


def test_g1_rejects_bad_arguments():
    with pytest.raises(ValueError):
        g1(0, 4, 2)
    with pytest.raises(ValueError):
        g1(0, 2, 1)
    with pytest.raises(ValueError):
        g1(4, 2, 2)
    with pytest.raises(ValueError):
        g1(-1, 2, 2)


@pytest.mark.parametrize("p,k", W1_CASES)
def test_w1_is_hamming_weight_of_g1(p, k):
    for u in range(p**k):
        assert w1(u, p, k) == g1(u, p, k).hamming_weight()


@pytest.mark.parametrize("p,k", W1_CASES)
def test_w1_piecewise_form(p, k):
    # two-level profile away from zero; the map sends 0 to the zero vector
    assert w1(0, p, k) == 0
    for u in range(1, p**k):
        if u % p ** (k - 1) == 0:
            assert w1(u, p, k) == p ** (k - 1)
        else:
            assert w1(u, p, k) == p ** (k - 1) - p ** (k - 2)


@pytest.mark.parametrize("k", [3, 4])
def test_g1_truth_table_is_affine_in_the_point_for_p2(k):
    # position t encodes the evaluation point bitwise, so XOR of positions
    # is pointwise addition; the table obeys the affine law everywhere and
    # is a genuine homomorphism exactly when its constant term vanishes
    for u in range(2**k):
        digits = g1(u, 2, k).digits
        for s in range(2 ** (k - 1)):
            for t in range(2 ** (k - 1)):
                assert digits[s ^ t] == (digits[s] + digits[t] + digits[0]) % 2
        if u < 2 ** (k - 1):
            assert digits[0] == 0


@pytest.mark.parametrize("k", [3, 4])
def test_g1_distance_law_for_p2(k):
    # distinct elements map to distance 2^(k-1) across the halfway point,
    # 2^(k-2) everywhere else
    for a in range(2**k):
        for b in range(2**k):
            if a == b:
                continue
            dist = sum(
                x != y for x, y in zip(g1(a, 2, k).digits, g1(b, 2, k).digits)
            )
            if (a - b) % 2**k == 2 ** (k - 1):
                assert dist == 2 ** (k - 1)
            else:
                assert dist == 2 ** (k - 2)


# -- unary map g2 ----------------------------------------------------------


def test_g2_point_values_mod9():
    assert g2(2, 3, 2).digits == (1, 1, 0)
    assert g2(8, 3, 2).digits == (0, 0, 2)


def test_g2_point_values_mod27():
    assert g2(8, 3, 3).digits == (1,) * 8 + (0,)
    assert g2(26, 3, 3).digits == (0,) * 8 + (2,)


def test_g2_unary_prefix_below_block():
    for p, k in W2_CASES:
        block = p ** (k - 1)
        for u in range(block + 1):
            assert g2(u, p, k).digits == (1,) * u + (0,) * (block - u)


def test_g2_rejects_even_prime():
    with pytest.raises(ValueError):
        g2(1, 2, 2)
    with pytest.raises(ValueError):
        w2(1, 2, 2)


@pytest.mark.parametrize("p,k", W2_CASES)
def test_w2_is_hamming_weight_of_g2(p, k):
    for u in range(p**k):
        assert w2(u, p, k) == g2(u, p, k).hamming_weight()


@pytest.mark.parametrize("p,k", W2_CASES)
def test_w2_piecewise_form(p, k):
    # ramp up, plateau, ramp down
    block = p ** (k - 1)
    for u in range(p**k):
        if u <= block:
            assert w2(u, p, k) == u
        elif u <= p**k - block:
            assert w2(u, p, k) == block
        else:
            assert w2(u, p, k) == p**k - u


@pytest.mark.parametrize("p,k", W2_CASES)
def test_g2_zero_counts_cancel_across_top_band(p, k):
    # pairs (n, n + (p-1)p^(k-1)) split p^(k-1) zeros between their images
    shift = (p - 1) * p ** (k - 1)
    for n in range(1, p ** (k - 1)):
        m = n + shift
        zeros = sum(1 for d in g2(m, p, k).digits if d == 0)
        zeros += sum(1 for d in g2(n, p, k).digits if d == 0)
        assert zeros == p ** (k - 1)


def test_g2_progression_images_mod25():
    assert [g2(5 * t, 5, 2).digits for t in [1, 2, 3, 4, 0]] == [
        (1, 1, 1, 1, 1),
        (2, 2, 2, 2, 2),
        (3, 3, 3, 3, 3),
        (4, 4, 4, 4, 4),
        (0, 0, 0, 0, 0),
    ]
    assert [g2((5 * t + 3) % 25, 5, 2).digits for t in [1, 2, 3, 4, 0]] == [
        (2, 2, 2, 1, 1),
        (3, 3, 3, 2, 2),
        (4, 4, 4, 3, 3),
        (0, 0, 0, 4, 4),
        (1, 1, 1, 0, 0),
    ]


ZERO_TOTALS = {(3, 2, 1): 3, (3, 3, 1): 27, (3, 3, 2): 9, (5, 2, 1): 5}


@pytest.mark.parametrize("p,k,i", sorted(ZERO_TOTALS))
def test_g2_progression_zero_total_is_offset_free(p, k, i):
    # total zeros across {g2(t*p^i + j) : t = 1..p^(k-i)} does not depend on j
    expected = ZERO_TOTALS[(p, k, i)]
    for j in range(p**k + 3):
        total = 0
        for t in range(1, p ** (k - i) + 1):
            u = (t * p**i + j) % p**k
            total += sum(1 for d in g2(u, p, k).digits if d == 0)
        assert total == expected


# -- gray images -----------------------------------------------------------


def test_image_addition_is_coordinatewise_mod_p():
    a = GrayImage(3, (1, 2, 0))
    b = GrayImage(3, (2, 2, 1))
    assert (a + b).digits == (0, 1, 1)


def test_image_addition_rejects_mismatch():
    with pytest.raises(ValueError):
        GrayImage(3, (1, 2, 0)) + GrayImage(5, (1, 2, 0))
    with pytest.raises(ValueError):
        GrayImage(3, (1, 2, 0)) + GrayImage(3, (1, 2))


# -- weight tables ---------------------------------------------------------


def test_w2_table_values_mod9():
    assert [int(v) for v in w2_table(3, 2).values] == [0, 1, 2, 3, 3, 3, 3, 2, 1]


def test_w1_table_values_mod9():
    assert [int(v) for v in w1_table(3, 2).values] == [0, 2, 2, 3, 2, 2, 3, 2, 2]


def test_lee_table_matches_w1_on_mod4():
    assert lee_table(4).values == w1_table(2, 2).values


def test_table_rejects_bad_values():
    with pytest.raises(ValueError):
        WeightTable(4, (Fraction(1), Fraction(1), Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        WeightTable(4, (Fraction(0), Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        WeightTable(4, (Fraction(0), Fraction(-1), Fraction(1), Fraction(1)))
    with pytest.raises(ValueError):
        WeightTable(1, (Fraction(0),))


def test_table_json_round_trip():
    table = WeightTable(4, (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(1, 2)))
    obj = table.to_json()
    assert obj == {"m": 4, "values": [0, "1/2", 1, "1/2"]}
    assert WeightTable.from_json(obj) == table


def test_table_json_rejects_bad_schema():
    with pytest.raises(ValueError):
        WeightTable.from_json({"m": 4})
    with pytest.raises(ValueError):
        WeightTable.from_json([0, 1, 1, 1])


def test_table_is_callable_mod_m():
    table = lee_table(5)
    assert table(2) == 2
    assert table(7) == 2
    assert table(-1) == 1


# -- homogeneity -----------------------------------------------------------


@pytest.mark.parametrize("p,k", W1_CASES)
def test_w1_is_homogeneous(p, k):
    report = homogeneous_check(w1_table(p, k))
    assert report.is_homogeneous
    assert report.gamma == p ** (k - 1) - p ** (k - 2)
    assert report.witness is None


@pytest.mark.parametrize(
    "p,k,witness", [(3, 2, (2, 8)), (3, 3, (2, 26)), (5, 2, (2, 24))]
)
def test_w2_is_not_homogeneous(p, k, witness):
    report = homogeneous_check(w2_table(p, k))
    assert not report.is_homogeneous
    assert report.gamma is None
    assert report.witness == witness


def test_w2_witness_pair_shares_an_ideal_but_not_a_weight():
    table = w2_table(3, 2)
    # 2 and 8 generate the same ideal of Z_9 yet carry different weights
    assert {(2 * t) % 9 for t in range(9)} == {(8 * t) % 9 for t in range(9)}
    assert table(2) != table(8)


def test_hamming_table_homogeneous_only_for_prime_modulus():
    report = homogeneous_check(hamming_table(5))
    assert report.is_homogeneous
    assert report.gamma == Fraction(4, 5)
    assert not homogeneous_check(hamming_table(6)).is_homogeneous


def test_ideal_average_violation_reports_generator():
    # equal weights on each generator class, but the two ideals average
    # differently
    table = WeightTable(4, (Fraction(0), Fraction(1), Fraction(3), Fraction(1)))
    report = homogeneous_check(table)
    assert not report.is_homogeneous
    assert report.witness == 2


def test_homogeneity_report_json_shapes():
    good = homogeneous_check(w1_table(3, 2)).to_json()
    assert good == {"is_homogeneous": True, "gamma": 2, "witness": None}
    bad = homogeneous_check(w2_table(3, 2)).to_json()
    assert bad == {"is_homogeneous": False, "gamma": None, "witness": [2, 8]}
    frac = homogeneous_check(hamming_table(5)).to_json()
    assert frac["gamma"] == "4/5"


@pytest.mark.parametrize("p,k", W2_CASES)
def test_w2_average_matches_homogeneous_gamma(p, k):
    # the full-ring average of the non-homogeneous weight still lands on
    # (p-1)p^(k-2), the same constant the homogeneous weight produces
    assert gamma_average(w2_table(p, k)) == (p - 1) * p ** (k - 2)


def test_average_of_w1_equals_its_gamma():
    for p, k in W1_CASES:
        table = w1_table(p, k)
        assert gamma_average(table) == homogeneous_check(table).gamma
