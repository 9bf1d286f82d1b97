"""Verification workbench for the ring of GL2(F_q) vector invariants on a
defining representation plus its dual, built from seven explicit generators
and five relations, with machine-checked certificates for every claimed
identity.
"""

from ._version import __version__
from .gf import FieldParams, FieldElement, NotPrime, ff_from_q, ff_make
from .mpoly import Polynomial, PolyRing
from .action import Mat2, act, enumerate_gl2, enumerate_sl2, \
    frobenius_star, invariant_dimension, involution_star, is_invariant
from .gens import BasisSpec, InvariantContext, context, context_for_q
from .groebner import GroebnerBasis, buchberger, in_ideal, normal_form, \
    standard_monomial_count
from .verify import CheckItem, ReductionCertificate, SuiteReport, \
    check_hilbert, check_invariance, check_kernel, check_products, \
    check_relations, elimination_crosscheck, hilbert_series_from_basis, \
    negative_controls, reduce_product, verify_certificate

__all__ = [
    "__version__",
    "FieldParams", "FieldElement", "NotPrime", "ff_from_q", "ff_make",
    "Polynomial", "PolyRing",
    "Mat2", "act", "enumerate_gl2", "enumerate_sl2", "frobenius_star",
    "invariant_dimension", "involution_star", "is_invariant",
    "BasisSpec", "InvariantContext", "context", "context_for_q",
    "GroebnerBasis", "buchberger", "in_ideal", "normal_form",
    "standard_monomial_count",
    "CheckItem", "ReductionCertificate", "SuiteReport",
    "check_hilbert", "check_invariance", "check_kernel", "check_products",
    "check_relations", "elimination_crosscheck", "hilbert_series_from_basis",
    "negative_controls", "reduce_product", "verify_certificate",
]
