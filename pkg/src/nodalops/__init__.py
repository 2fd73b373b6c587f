"""Exact symbolic computation with differential operators on curve rings.

The package models the subalgebra A = k + f*k[t] of the polynomial ring cut
out by a product f of pairwise coprime factors, the operators D_A = k + f*W
inside the full operator algebra W of k[t], and emits machine-checkable
certificates for two negative structural facts about D_A (no local
projectivity, no coproduct compatible with evaluation at 1).
"""

from .certfile import (
    CertificateFormatError,
    ReplayOutcome,
    certificate_from_document,
    certificate_to_document,
    load_document,
    replay_digest,
    replay_document,
    save_certificate,
    SCHEMA_VERSION,
    TOOL_VERSION,
)
from .curves import (
    CurveError,
    CurveRing,
    OperatorSplit,
    irreducibility_status,
    new_curve,
    nodal_cubic,
    nodal_cubic_embedding,
    verify_nodal_cubic_embedding,
)
from .exprparse import ParseError, parse_expr, parse_operator, parse_poly
from .obstructions import (
    BoundExhaustedError,
    Certificate,
    CheckRecord,
    CLAIM_NO_BIALGEBROID,
    CLAIM_NOT_LOCALLY_PROJECTIVE,
    Decomposition,
    DecompositionError,
    WitnessPair,
    apply_pairwise,
    apply_to_product,
    certificate_checks,
    check_image_containment,
    construct_raiser,
    counit,
    decomposition_reproduces,
    evaluate_decomposition,
    ideal_escape_witness,
    refute_bialgebroid,
    refute_local_projectivity,
    search_noncontainment,
    square_escape_witness,
)
from .polynomials import MINUS_INFINITY, Poly, Rational, poly_gcd
from .weyl import GeneratorWord, WeylOp, commutator, word_product, word_to_weyl, words_to_weyl

__version__ = TOOL_VERSION

__all__ = [
    "BoundExhaustedError",
    "Certificate",
    "CertificateFormatError",
    "CheckRecord",
    "CLAIM_NO_BIALGEBROID",
    "CLAIM_NOT_LOCALLY_PROJECTIVE",
    "CurveError",
    "CurveRing",
    "Decomposition",
    "DecompositionError",
    "GeneratorWord",
    "MINUS_INFINITY",
    "OperatorSplit",
    "ParseError",
    "Poly",
    "Rational",
    "ReplayOutcome",
    "SCHEMA_VERSION",
    "TOOL_VERSION",
    "WeylOp",
    "WitnessPair",
    "apply_pairwise",
    "apply_to_product",
    "certificate_checks",
    "certificate_from_document",
    "certificate_to_document",
    "check_image_containment",
    "commutator",
    "construct_raiser",
    "counit",
    "decomposition_reproduces",
    "evaluate_decomposition",
    "ideal_escape_witness",
    "irreducibility_status",
    "load_document",
    "new_curve",
    "nodal_cubic",
    "nodal_cubic_embedding",
    "parse_expr",
    "parse_operator",
    "parse_poly",
    "poly_gcd",
    "refute_bialgebroid",
    "refute_local_projectivity",
    "replay_digest",
    "replay_document",
    "save_certificate",
    "search_noncontainment",
    "square_escape_witness",
    "verify_nodal_cubic_embedding",
    "word_product",
    "word_to_weyl",
    "words_to_weyl",
]
