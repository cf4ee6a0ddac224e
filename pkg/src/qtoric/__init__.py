"""Exact classification of quasitoric manifolds over a product of two
simplices (second Betti number 2), with integer-lattice and polynomial
machinery, closed-form homeomorphism decisions, and independent brute-force
oracles."""

from .lattice import (
    IntMatrix,
    LatticeBasis,
    determinant,
    hermite_normal_form,
    is_basis_extendable,
    kernel_basis,
    lattice_equal,
    lattice_from_generators,
    smith_normal_form,
)
from .polyring import (
    HomogPoly,
    TruncPoly,
    homog_add,
    homog_mul,
    homog_scale,
    ideal_degree_lattice,
    linear_product,
    substitute_linear,
    trunc_product_identity,
)
from .quasitoric import (
    CharPair,
    GradedRanks,
    NormalForm,
    Presentation,
    all_char_pairs,
    characteristic_matrix,
    characteristic_matrix_grouped,
    cohomology_presentation,
    graded_ranks,
    h_vector,
    is_generalized_bott,
    kernel_lattice,
    kernel_span_vectors,
    normalize,
    validate,
    validate_bruteforce,
)
from .classify import (
    HomeoClass,
    canonical_class,
    count_nonbott,
    enumerate_classes,
    homeomorphic,
    is_nonbott_class,
    same_class,
    tilde_equiv,
)
from .oracle import (
    WITNESS_FAMILIES,
    IsoVerdict,
    MonomialWitness,
    builtin_witness,
    ring_iso_search,
    weight_matrix,
    witness_check,
)

__version__ = "1.0.0"

__all__ = [
    "IntMatrix",
    "LatticeBasis",
    "determinant",
    "hermite_normal_form",
    "is_basis_extendable",
    "kernel_basis",
    "lattice_equal",
    "lattice_from_generators",
    "smith_normal_form",
    "HomogPoly",
    "TruncPoly",
    "homog_add",
    "homog_mul",
    "homog_scale",
    "ideal_degree_lattice",
    "linear_product",
    "substitute_linear",
    "trunc_product_identity",
    "CharPair",
    "GradedRanks",
    "NormalForm",
    "Presentation",
    "all_char_pairs",
    "characteristic_matrix",
    "characteristic_matrix_grouped",
    "cohomology_presentation",
    "graded_ranks",
    "h_vector",
    "is_generalized_bott",
    "kernel_lattice",
    "kernel_span_vectors",
    "normalize",
    "validate",
    "validate_bruteforce",
    "HomeoClass",
    "canonical_class",
    "count_nonbott",
    "enumerate_classes",
    "homeomorphic",
    "is_nonbott_class",
    "same_class",
    "tilde_equiv",
    "WITNESS_FAMILIES",
    "IsoVerdict",
    "MonomialWitness",
    "builtin_witness",
    "ring_iso_search",
    "weight_matrix",
    "witness_check",
    "__version__",
]
