"""Exact polynomial algebra over GF(p) or QQ: Groebner bases, ideals, Hilbert series."""

from .field import DEFAULT_PRIME, QQ, PrimeField, RationalField, field_for
from .groebner import (GroebnerAborted, Reducer, groebner_basis, is_groebner, is_reduced,
                       reduce_polynomial, s_polynomial)
from .hilbert import HilbertSeries, hilbert_series, monomial_numerator
from .ideal import Ideal, ideal_intersection, ideal_product, ideal_sum, intersect_all
from .poly import (Elimination, Grevlex, Lex, Polynomial, PolynomialRing, format_ideal_text,
                   format_polynomial, parse_ideal_text, parse_polynomial)


def normal_form(f, ideal):
    return ideal.normal_form(f)


def is_member(f, ideal):
    return ideal.contains(f)


__all__ = [
    "DEFAULT_PRIME", "QQ", "PrimeField", "RationalField", "field_for",
    "GroebnerAborted", "Reducer", "groebner_basis", "is_groebner", "is_reduced",
    "reduce_polynomial", "s_polynomial", "HilbertSeries", "hilbert_series",
    "monomial_numerator", "Ideal", "ideal_intersection", "ideal_product", "ideal_sum",
    "intersect_all", "Elimination", "Grevlex", "Lex", "Polynomial", "PolynomialRing",
    "format_ideal_text", "format_polynomial", "parse_ideal_text", "parse_polynomial",
    "normal_form", "is_member",
]
