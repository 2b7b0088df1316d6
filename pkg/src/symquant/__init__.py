"""Exact symmetrization quantization of polynomial Poisson algebras.

Commutative polynomials in generators with polynomial Poisson brackets are
mapped to symmetrized noncommutative polynomials; brackets and commutators
are compared exactly, modulo the generator relations, over the rationals.
"""

from .coeffs import CoeffPoly, format_scalar, parse_scalar
from .cpoly import CPoly
from .errors import (CapExceededError, CaseError, ContextMismatchError, ParseError,
                     RelationError, SymQuantError, UnknownBracketError)
from .freealg import (DEGREE_CAP, SYM_CAP, NCPoly, abelianize, commutator, diamond,
                      nested_commutator, sym_k)
from .relations import (Case, RelationSystem, ValidationReport, canonical_system,
                        equal_mod_relations, nf_product, normal_form, normal_form_sym,
                        substituting_commutator, validate_relations)
from .poisson import casimir_check, leibniz_bracket
from .symmetrization import (CasimirResult, CorrespondenceResult, QuantizationReport,
                             bracket_correspondence, casimir_quantization, quantize_check,
                             symmetrize)
from .identities import (VerificationResult, bernoulli_coeffs, moyal_bracket,
                         transposition_expand, verify_lemma1, verify_pc1, verify_pc2,
                         wick_commutator, wick_product, wick_system)
from .parsing import parse_expr
from .algebra_io import load_set, load_system, preset

__all__ = [
    "CoeffPoly", "format_scalar", "parse_scalar", "CPoly",
    "CapExceededError", "CaseError", "ContextMismatchError", "ParseError", "RelationError",
    "SymQuantError", "UnknownBracketError",
    "DEGREE_CAP", "SYM_CAP", "NCPoly", "abelianize", "commutator", "diamond",
    "nested_commutator", "sym_k",
    "Case", "RelationSystem", "ValidationReport", "canonical_system", "equal_mod_relations",
    "nf_product", "normal_form", "normal_form_sym", "substituting_commutator",
    "validate_relations",
    "casimir_check", "leibniz_bracket",
    "CasimirResult", "CorrespondenceResult", "QuantizationReport", "bracket_correspondence",
    "casimir_quantization", "quantize_check", "symmetrize",
    "VerificationResult", "bernoulli_coeffs", "moyal_bracket", "transposition_expand",
    "verify_lemma1", "verify_pc1", "verify_pc2", "wick_commutator", "wick_product",
    "wick_system",
    "parse_expr", "load_set", "load_system", "preset",
]
