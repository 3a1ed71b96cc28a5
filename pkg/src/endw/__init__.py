"""Exact computations with automorphisms of the endomorphism semigroup End(W).

W is a free commutative or free associative algebra over Q or Q(sqrt d).
Every automorphism of End(W) considered here is conjugation
``s -> mu o s o mu^-1`` by a bijection ``mu`` in canonical form
``linear o alpha o phi o mirror^e``.

>>> from endw import Algebra, Kind, Field, Endomorphism, normalize, parse_bijection_word, conjugate
>>> A = Algebra(Kind.ASSOCIATIVE, 2, Field(2))
>>> mu = normalize(parse_bijection_word("mirror", A))
>>> print(conjugate(mu, Endomorphism.parse("x1 -> x1*x2; x2 -> x2", A)))
x1 -> x2*x1; x2 -> x2
"""

from .autos import (
    Affine,
    BasicElementWitness,
    Elementary,
    TameAutomorphism,
    as_endomorphism,
    basic_element,
    invert,
    mirror_twist,
    parse_tame_word,
    twist_by_field_automorphism,
)
from .endaut import (
    AlgebraAuto,
    BijectionWord,
    CanonicalQuasiInner,
    CentralityVerdict,
    DecompositionError,
    DecompositionReport,
    FieldSemilinear,
    LawResult,
    Linear,
    Mirror,
    OracleTable,
    UnaryPolynomial,
    apply_bijection,
    base_image_check,
    base_image_witness,
    centrality_probe,
    conjugate,
    conjugate_by_definition,
    decompose_blackbox,
    law_checks,
    normalize,
    parse_bijection_word,
    solve_product_coefficients,
    standard_probes,
)
from .endo import (
    Endomorphism,
    ProbeSet,
    apply,
    collapse_probe,
    compose,
    constant,
    identity,
    is_constant,
    one_slot_probe,
    theorem2_probe_set,
)
from .freealg import Algebra, DegreeCapError, Element, Kind, elem_arith, mirror, substitute
from .galois import PrincipalBasicIdeal, in_double_prime, in_prime_set, killing_endomorphism, sample_ideal
from .parsing import ParseError, parse_expression, parse_scalar
from .scalars import Q, Field, FieldAutomorphism, FieldMismatchError, Scalar, apply_field_automorphism, scalar_arith

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "Algebra",
    "AlgebraAuto",
    "apply",
    "apply_bijection",
    "apply_field_automorphism",
    "as_endomorphism",
    "base_image_check",
    "base_image_witness",
    "basic_element",
    "BasicElementWitness",
    "BijectionWord",
    "CanonicalQuasiInner",
    "centrality_probe",
    "CentralityVerdict",
    "collapse_probe",
    "compose",
    "conjugate",
    "conjugate_by_definition",
    "constant",
    "decompose_blackbox",
    "DecompositionError",
    "DecompositionReport",
    "DegreeCapError",
    "elem_arith",
    "Element",
    "Elementary",
    "Endomorphism",
    "Field",
    "FieldAutomorphism",
    "FieldMismatchError",
    "FieldSemilinear",
    "identity",
    "in_double_prime",
    "in_prime_set",
    "invert",
    "is_constant",
    "killing_endomorphism",
    "Kind",
    "law_checks",
    "LawResult",
    "Linear",
    "mirror",
    "Mirror",
    "mirror_twist",
    "normalize",
    "one_slot_probe",
    "OracleTable",
    "parse_bijection_word",
    "parse_expression",
    "parse_scalar",
    "parse_tame_word",
    "ParseError",
    "PrincipalBasicIdeal",
    "ProbeSet",
    "Q",
    "sample_ideal",
    "Scalar",
    "scalar_arith",
    "solve_product_coefficients",
    "standard_probes",
    "substitute",
    "TameAutomorphism",
    "theorem2_probe_set",
    "twist_by_field_automorphism",
    "UnaryPolynomial",
]
