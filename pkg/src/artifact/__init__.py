"""Mixed binary/quaternary linear codes over Galois rings.

The package builds the chain ring GR(4, m) together with its residue
field, skew polynomial rings under a power of the Frobenius lift, and
the additive codes whose coordinates split into a binary block and a
quaternary block.  On top of that sit standard forms, parity-check
matrices, skew cyclic generator tuples with their cofactors and
spanning sets, and small brute-force oracles used to cross-check the
algebra by enumeration.
"""

from .errors import (ArtifactError, BudgetExceeded, ContextMismatch,
                     DivisionByZero, DivisorNotUnitLeading,
                     FrobeniusIncompatible, MissingComponent, NotACode,
                     NotBasicIrreducible, NotMonic, NotPrimitive,
                     NotRightDivisible, NotUnit, OrthogonalityCheckFailed,
                     ParseError, ShapeMismatch, TrivialCode)
from .galois import AutomorphismSpec, FieldElem, RingContext, RingElem
from .mixedcode import (CodeType, MixedMatrix, MixedWord,
                        StandardFormResult, cardinality, dual_type,
                        inner_product, parity_check, scalar_mul,
                        standard_form)
from .oracle import (DEFAULT_BUDGET, Classification, EnumeratedCode,
                     brute_force_dual, classify_z4_skew_cyclic,
                     is_skew_cyclic, min_hamming_distance, span_closure)
from .skewcyclic import (ConditionCheck, ModulePair, SkewGenerators,
                         SpanningSet, ValidationReport, derive_cofactors,
                         from_pair, module_mul, psi_project,
                         skew_code_cardinality, spanning_set, theta_shift,
                         to_pair, validate_generators)
from .skewpoly import SkewPoly, poly_mod2, right_divides
from .textio import (emit_gens, emit_matrix, int_poly_str, parse_element,
                     parse_gens, parse_int_poly, parse_matrix, parse_poly)

__version__ = "1.0.0"

__all__ = [
    "ArtifactError", "AutomorphismSpec", "BudgetExceeded",
    "Classification", "CodeType", "ConditionCheck", "ContextMismatch",
    "DEFAULT_BUDGET", "DivisionByZero", "DivisorNotUnitLeading",
    "EnumeratedCode", "FieldElem", "FrobeniusIncompatible",
    "MissingComponent", "MixedMatrix", "MixedWord", "ModulePair",
    "NotACode", "NotBasicIrreducible", "NotMonic", "NotPrimitive",
    "NotRightDivisible", "NotUnit", "OrthogonalityCheckFailed",
    "ParseError", "RingContext", "RingElem", "ShapeMismatch",
    "SkewGenerators", "SkewPoly", "SpanningSet", "StandardFormResult",
    "TrivialCode", "ValidationReport", "brute_force_dual", "cardinality",
    "classify_z4_skew_cyclic", "derive_cofactors", "dual_type",
    "emit_gens", "emit_matrix", "from_pair", "inner_product",
    "int_poly_str", "is_skew_cyclic", "min_hamming_distance",
    "module_mul", "parity_check", "parse_element", "parse_gens",
    "parse_int_poly", "parse_matrix", "parse_poly", "poly_mod2",
    "psi_project", "right_divides", "scalar_mul", "skew_code_cardinality",
    "span_closure", "spanning_set", "standard_form", "theta_shift",
    "to_pair", "validate_generators",
]
