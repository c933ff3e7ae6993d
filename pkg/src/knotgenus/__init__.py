"""Exact-arithmetic slice-genus toolkit for the K(m,n) family of 2-bridge
knots: Seifert invariants, genus-1 reduction certificates, and integral
lattice embedding obstructions."""

from .curve_search import (
    CurveCertificate,
    default_search_bound,
    find_genus1_certificate,
    restricted_form,
    verify_certificate,
)
from .exact_arith import (
    Fraction,
    LaurentPolynomial,
    equal_up_to_units,
    laurent_mul,
    laurent_normalize,
)
from .lattice import (
    Embedding,
    SearchBudgetExceeded,
    find_embedding,
    is_positive_definite,
    min_embedding_dim,
    verify_embedding,
)
from .matrices import GramLattice, format_matrix_text, parse_matrix_text
from .pipeline import (
    SliceReport,
    full_report,
    genus_bounds,
    obstruction_dim,
    signature_from_goeritz,
    verify_theorem,
)
from .seifert import alexander, alexander_trivial_2x2, knot_determinant, signature
from .two_bridge import (
    KnotParams,
    cf_to_fraction,
    continued_fraction,
    crossing_count,
    fraction_to_cf,
    knot_fraction,
    plumbing_weights,
    positive_crossings,
    qmn_gram,
    seifert_matrix,
)

__version__ = "0.1.0"
