"""Weighted multivariate polynomials, binary forms and their text syntax"""
from .forms import BinaryForm
from .parser import parse_poly
from .poly import (
    DP1_ALPHABET,
    MAX_FLAT_VARIABLES,
    Alphabet,
    Monomial,
    MultiPoly,
    flat_alphabet,
    format_monomial,
    format_poly,
    poly_arith,
)

__all__ = [
    "DP1_ALPHABET",
    "MAX_FLAT_VARIABLES",
    "Alphabet",
    "BinaryForm",
    "Monomial",
    "MultiPoly",
    "flat_alphabet",
    "format_monomial",
    "format_poly",
    "parse_poly",
    "poly_arith",
]
