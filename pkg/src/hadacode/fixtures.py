"""Bundled matrix corpus: every fixture passes its verifier at load time.

Fixture ids are stable strings used by the command-line interface and the
acceptance suite.  Provenance strings describe what each matrix is
mathematically; verification is re-run on load so a corrupted fixture cannot
be served.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .bh import BhMatrix, bh_verify, fourier, gh_check
from .laurent import LaurentPoly
from .ph import Modulus, PhMatrix, ph_verify

__all__ = ["FixtureEntry", "fixture_ids", "get_entry", "all_entries", "load_fixture"]


@dataclass(frozen=True)
class FixtureEntry:
    id: str
    kind: str
    payload: dict
    provenance: str


_PH_6_F43_ROWS = (
    (0, 0, 0, 0, 0, 0),
    (0, 6, 1, 11, 11, 1),
    (0, 1, 6, 1, 11, 11),
    (0, 11, 1, 6, 1, 11),
    (0, 11, 11, 1, 6, 1),
    (0, 1, 11, 11, 1, 6),
)

_PH_6_F43_SHIFTED_ROWS = tuple(
    tuple(13 if (i, j) == (1, 5) else a for j, a in enumerate(row))
    for i, row in enumerate(_PH_6_F43_ROWS)
)

_PH_3_PHI3X2_ROWS = ((0, 2, 2), (2, 0, 2), (2, 2, 0))

_MERGE_H1_ROWS = ((1, -2, 0), (0, -2, -2), (0, -1, 0))
_MERGE_H2_ROWS = ((-2, 1, 0), (0, 1, -2), (0, -1, 0))
_MERGED_ROWS = ((4, 1, 0), (0, 1, 4), (0, 5, 0))

_PROD_H1_ROWS = ((2, 4), (0, 1))
_PROD_H2_ROWS = ((1, 5), (0, 1))
_PROD_H3_ROWS = ((3, 1), (1, 0))

_BH_12_36_ROWS = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 12, 24, 28, 4, 16, 0, 12, 24, 0, 12, 24),
    (0, 24, 12, 20, 8, 32, 0, 24, 12, 0, 24, 12),
    (0, 27, 0, 0, 0, 0, 18, 9, 18, 18, 18, 18),
    (0, 3, 24, 28, 4, 16, 18, 21, 6, 18, 30, 6),
    (0, 15, 12, 20, 8, 32, 18, 33, 30, 18, 6, 30),
    (0, 0, 0, 18, 18, 18, 9, 0, 0, 27, 18, 18),
    (0, 12, 24, 10, 22, 34, 9, 12, 24, 27, 30, 6),
    (0, 24, 12, 2, 26, 14, 9, 24, 12, 27, 6, 30),
    (0, 27, 0, 18, 18, 18, 27, 9, 18, 9, 0, 0),
    (0, 3, 24, 10, 22, 34, 27, 21, 6, 9, 12, 24),
    (0, 15, 12, 2, 26, 14, 27, 33, 30, 9, 24, 12),
)

_BH_9_10_ROWS = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 5, 3, 3, 5, 9, 8, 7, 1),
    (0, 4, 5, 7, 1, 3, 5, 9, 9),
    (0, 3, 7, 5, 1, 8, 9, 3, 5),
    (0, 9, 1, 5, 5, 3, 7, 2, 7),
    (0, 9, 5, 1, 3, 5, 1, 7, 6),
    (0, 1, 7, 9, 6, 1, 5, 5, 3),
    (0, 7, 9, 4, 9, 5, 3, 5, 1),
    (0, 5, 2, 9, 7, 7, 3, 1, 5),
)

_BH_8_4_ROWS = (
    (0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 2, 2, 2, 1, 3, 0),
    (0, 1, 1, 3, 0, 2, 2, 3),
    (0, 1, 3, 1, 2, 3, 1, 3),
    (0, 2, 3, 1, 0, 1, 3, 2),
    (0, 2, 1, 3, 2, 0, 0, 2),
    (0, 3, 2, 2, 0, 3, 1, 1),
    (0, 3, 0, 0, 2, 2, 2, 1),
)

_GH_5_C5_ROWS = (
    (0, 1, 4, 4, 1),
    (1, 0, 1, 4, 4),
    (4, 1, 0, 1, 4),
    (4, 4, 1, 0, 1),
    (1, 4, 4, 1, 0),
)


def _ph(rows, modulus: Modulus) -> dict:
    return PhMatrix.from_rows(rows, modulus).to_json()


def _bh(rows, m: int) -> dict:
    return BhMatrix.from_rows(rows, m).to_json()


def _build_registry() -> dict[str, FixtureEntry]:
    one_plus_x = Modulus.from_poly(LaurentPoly.from_dict({0: 1, 1: 1}))
    entries = [
        FixtureEntry(
            "ph_6_f43",
            "ph",
            _ph(_PH_6_F43_ROWS, Modulus.cyclotomic_product((4, 3))),
            "order 6, orthogonal modulo the product of the cyclotomic polynomials "
            "of orders 4 and 3",
        ),
        FixtureEntry(
            "ph_6_f43_shifted",
            "ph",
            _ph(_PH_6_F43_SHIFTED_ROWS, Modulus.cyclotomic_product((4, 3))),
            "ph_6_f43 with entry (1, 5) raised by the shifting number 12",
        ),
        FixtureEntry(
            "ph_3_phi3x2",
            "ph",
            _ph(
                _PH_3_PHI3X2_ROWS,
                Modulus.from_poly(LaurentPoly.from_dict({0: 1, 2: 1, 4: 1})),
            ),
            "order 3 with off-diagonal exponent 2, modulo the order-3 cyclotomic "
            "polynomial composed with x^2; also verifies modulo the order-3 "
            "cyclotomic polynomial itself",
        ),
        FixtureEntry(
            "ph_6_explicit",
            "ph",
            _ph(
                fourier(6).exponents,
                Modulus.from_poly(LaurentPoly.from_dict({0: 1, 1: -1, 2: 1})),
            ),
            "Fourier exponent pattern of order 6 over the explicit modulus "
            "x^2 - x + 1; row 4 has all-even exponents, so the value of the "
            "modulus at -1 must divide the order",
        ),
        FixtureEntry(
            "ph_3_merge_h1",
            "ph",
            _ph(_MERGE_H1_ROWS, Modulus.cyclotomic_product((3,))),
            "left factor of the congruence-merge example, over the order-3 "
            "cyclotomic polynomial",
        ),
        FixtureEntry(
            "ph_3_merge_h2",
            "ph",
            _ph(_MERGE_H2_ROWS, Modulus.cyclotomic_product((6,))),
            "right factor of the congruence-merge example, over the order-6 "
            "cyclotomic polynomial",
        ),
        FixtureEntry(
            "ph_3_merged",
            "ph",
            _ph(_MERGED_ROWS, Modulus.cyclotomic_product((3, 6))),
            "entrywise congruence merge of ph_3_merge_h1 and ph_3_merge_h2; "
            "its top-left exponent is 4",
        ),
        FixtureEntry(
            "ph_2_prod_h1",
            "ph",
            _ph(_PROD_H1_ROWS, one_plus_x),
            "first factor of a three-matrix product whose Gram matrix is 8I "
            "modulo 1 + x",
        ),
        FixtureEntry(
            "ph_2_prod_h2",
            "ph",
            _ph(_PROD_H2_ROWS, one_plus_x),
            "second factor of a three-matrix product whose Gram matrix is 8I "
            "modulo 1 + x",
        ),
        FixtureEntry(
            "ph_2_prod_h3",
            "ph",
            _ph(_PROD_H3_ROWS, one_plus_x),
            "third factor of a three-matrix product whose Gram matrix is 8I "
            "modulo 1 + x",
        ),
        FixtureEntry(
            "bh_12_36",
            "bh",
            _bh(_BH_12_36_ROWS, 36),
            "order 12 over the 36th roots of unity; minimum row Hamming "
            "distance 7 against a smallest-divisor bound of 6",
        ),
        FixtureEntry(
            "bh_9_10",
            "bh",
            _bh(_BH_9_10_ROWS, 10),
            "order 9 over the 10th roots of unity; minimum row Hamming "
            "distance 7 against a smallest-divisor bound of 9/2",
        ),
        FixtureEntry(
            "bh_8_4",
            "bh",
            _bh(_BH_8_4_ROWS, 4),
            "normalized order 8 over the 4th roots of unity; its binary Gray "
            "expansion has minimum distance 8",
        ),
        FixtureEntry(
            "bh_9_9",
            "bh",
            fourier(9).to_json(),
            "Fourier matrix of order 9; its ternary Gray expansion has minimum "
            "distance 18 and yields a Plotkin-optimal code",
        ),
        FixtureEntry(
            "gh_5_c5",
            "gh",
            {"kind": "gh", "n": 5, "k": 5, "exponents": [list(r) for r in _GH_5_C5_ROWS]},
            "circulant order 5 over the cyclic group of order 5",
        ),
    ]
    return {entry.id: entry for entry in entries}


_REGISTRY = _build_registry()


def fixture_ids() -> list[str]:
    return sorted(_REGISTRY)


def all_entries() -> list[FixtureEntry]:
    return [_REGISTRY[fid] for fid in fixture_ids()]


def get_entry(fixture_id: str) -> FixtureEntry:
    try:
        return _REGISTRY[fixture_id]
    except KeyError:
        raise KeyError(
            f"unknown fixture {fixture_id!r}; available: {', '.join(fixture_ids())}"
        ) from None


def load_fixture(
    fixture_id: str, verify: bool = True
) -> Union[PhMatrix, BhMatrix, tuple]:
    """Materialise a fixture; by default its verifier must pass.

    Returns a PhMatrix, a BhMatrix, or for group-matrix fixtures a
    (rows, group_order) pair.
    """
    entry = get_entry(fixture_id)
    if entry.kind == "ph":
        matrix = PhMatrix.from_json(entry.payload)
        if verify and not ph_verify(matrix).ok:
            raise RuntimeError(f"fixture {fixture_id} failed verification")
        return matrix
    if entry.kind == "bh":
        matrix = BhMatrix.from_json(entry.payload)
        if verify and not bh_verify(matrix).ok:
            raise RuntimeError(f"fixture {fixture_id} failed verification")
        return matrix
    rows = tuple(tuple(row) for row in entry.payload["exponents"])
    k = entry.payload["k"]
    if verify and not gh_check(rows, k).is_gh:
        raise RuntimeError(f"fixture {fixture_id} failed verification")
    return rows, k
