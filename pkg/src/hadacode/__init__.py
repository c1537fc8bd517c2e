"""Exact-arithmetic toolkit for power and Butson Hadamard matrices and their codes.

Layering: ``laurent`` (rational Laurent polynomials and cyclotomic residues)
underpins ``ph`` and ``bh`` (monomial and root-of-unity matrices), ``gray``
maps exponents into digit vectors with exact weight tables, and ``codes``
turns matrices into codes with distance and bound reports.  ``kernels``
provides the compiled distance backend with a pure-python fallback, and
``fixtures`` ships verified example matrices used by the CLI and the tests.
"""

from .bh import (
    BhMatrix,
    BlendReport,
    GhReport,
    bh_lift,
    bh_normalize,
    bh_search,
    bh_verify,
    blend_check,
    fourier,
    gh_check,
)
from .codes import (
    Code,
    DistanceReport,
    GrayExpansion,
    MergeDistanceReport,
    PlotkinReport,
    RowBoundReport,
    bh_row_distance_bound,
    code_from_matrix,
    equidistant_check,
    gray_expand,
    merged_distance_check,
    min_distance_hamming,
    min_distance_weighted,
    plotkin_check,
)
from .fixtures import FixtureEntry, all_entries, fixture_ids, get_entry, load_fixture
from .gray import (
    GrayImage,
    HomogeneityReport,
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
from .laurent import CycloElement, LaurentPoly, cyclotomic, euler_phi, zeta_pow
from .ph import (
    Modulus,
    NonexistenceReport,
    PhMatrix,
    VerificationReport,
    exponent_replace,
    nonexistence_check,
    ph_crt_merge,
    ph_equiv_transform,
    ph_evaluate,
    ph_kronecker,
    ph_normalize,
    ph_product_verify,
    ph_shift,
    ph_substitute,
    ph_verify,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # polynomials and cyclotomic residues
    "LaurentPoly",
    "CycloElement",
    "cyclotomic",
    "euler_phi",
    "zeta_pow",
    # monomial matrices
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
    # root-of-unity matrices
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
    # digit maps and weights
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
    # codes and bounds
    "Code",
    "DistanceReport",
    "GrayExpansion",
    "MergeDistanceReport",
    "PlotkinReport",
    "RowBoundReport",
    "code_from_matrix",
    "min_distance_hamming",
    "min_distance_weighted",
    "gray_expand",
    "bh_row_distance_bound",
    "merged_distance_check",
    "plotkin_check",
    "equidistant_check",
    # bundled corpus
    "FixtureEntry",
    "fixture_ids",
    "get_entry",
    "all_entries",
    "load_fixture",
]
