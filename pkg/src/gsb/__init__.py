"""Groebner-Shirshov basis workbench for free associative algebras.

Exact-arithmetic noncommutative rewriting over monoid presentations:
deg-lex leading-word reduction, critical-pair (composition) analysis,
degree-bounded completion, and an independent brute-force congruence
oracle for cross-validation.
"""

__version__ = "0.1.0"

from .poly import Poly, ZeroPolynomialError, format_poly, parse_poly
from .rewrite import Basis, build_basis, irreducible_words, normal_form, reduce_step
from .words import Word, compare_deglex, format_word, parse_word

__all__ = [
    "__version__",
    "Poly",
    "ZeroPolynomialError",
    "format_poly",
    "parse_poly",
    "Basis",
    "build_basis",
    "irreducible_words",
    "normal_form",
    "reduce_step",
    "Word",
    "compare_deglex",
    "format_word",
    "parse_word",
]
