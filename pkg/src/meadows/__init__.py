"""Finite meadows: commutative rings with a total, zero-fixing inverse.

Construct them (Galois fields, totalized Z/nZ, direct products), check the
defining equations exhaustively, decompose any finite meadow into its unique
product of Galois fields, and count distinguished elements against the
closed-form predictions.
"""

from meadows.census import (
    CensusReport,
    build_from_signature,
    check_cube_characterization,
    count_invertibles,
    count_self_inverses,
    enumerate_signatures,
    predict_counts,
    take_census,
)
from meadows.construct import (
    AmbiguousInverseError,
    GaloisFieldSpec,
    NoInverseError,
    direct_product,
    find_irreducible,
    inverse_candidates,
    make_gf,
    make_zmod_ring,
    product_decode,
    product_encode,
    totalize_inverse,
)
from meadows.decompose import (
    CriterionMismatchError,
    Decomposition,
    Signature,
    TheoremViolationError,
    are_isomorphic,
    decompose,
    factor_by_idempotent,
    is_minimal_meadow,
    prime_submeadow,
    signature_of,
)
from meadows.idempotents import (
    IdempotentSet,
    are_orthogonal,
    idempotent_set,
    idempotents,
    leq_idempotent,
    minimal_idempotents,
)
from meadows.io import (
    StructureFileError,
    load_structure,
    parse_structure_file,
    save_structure,
    serialize_structure,
)
from meadows.structures import (
    AXIOM_NAMES,
    RING_AXIOM_NAMES,
    AxiomReport,
    FiniteStructure,
    MeadowError,
    check_axioms,
    evaluate_axiom,
    is_commutative_ring,
    is_meadow,
    validate_structure,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOM_NAMES",
    "RING_AXIOM_NAMES",
    "AmbiguousInverseError",
    "AxiomReport",
    "CensusReport",
    "CriterionMismatchError",
    "Decomposition",
    "FiniteStructure",
    "GaloisFieldSpec",
    "IdempotentSet",
    "MeadowError",
    "NoInverseError",
    "Signature",
    "StructureFileError",
    "TheoremViolationError",
    "are_isomorphic",
    "are_orthogonal",
    "build_from_signature",
    "check_axioms",
    "check_cube_characterization",
    "count_invertibles",
    "count_self_inverses",
    "decompose",
    "direct_product",
    "enumerate_signatures",
    "evaluate_axiom",
    "factor_by_idempotent",
    "find_irreducible",
    "idempotent_set",
    "idempotents",
    "inverse_candidates",
    "is_commutative_ring",
    "is_meadow",
    "is_minimal_meadow",
    "leq_idempotent",
    "load_structure",
    "make_gf",
    "make_zmod_ring",
    "minimal_idempotents",
    "parse_structure_file",
    "predict_counts",
    "prime_submeadow",
    "product_decode",
    "product_encode",
    "save_structure",
    "serialize_structure",
    "signature_of",
    "take_census",
    "totalize_inverse",
    "validate_structure",
]
