"""Finite fields: canonical construction, element arithmetic, embeddings, univariate polynomials"""
from .core import (
    MAX_DEGREE,
    MAX_PRIME,
    FieldDesc,
    FieldElem,
    arith,
    field_of_order,
    format_coeffs,
    frobenius,
    is_irreducible,
    is_prime,
    make_field,
    parse_elem,
)
from .embed import common_field, embed, embedding_root

__all__ = [
    "MAX_DEGREE",
    "MAX_PRIME",
    "FieldDesc",
    "FieldElem",
    "arith",
    "common_field",
    "embed",
    "embedding_root",
    "field_of_order",
    "format_coeffs",
    "frobenius",
    "is_irreducible",
    "is_prime",
    "make_field",
    "parse_elem",
]
