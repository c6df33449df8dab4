"""Exact arithmetic: rationals, quadratic fields, sparse polynomials, elimination."""

from .elim import (
    bareiss_determinant,
    discriminant,
    gcd_univariate,
    perfect_square_form,
    primitive_part,
    resultant,
    roots_in_field,
    squarefree_part,
    sylvester_matrix,
)
from .numfield import (
    QI,
    QOMEGA,
    QQ,
    QSQRT5,
    QSQRTM3,
    FieldElem,
    NumberField,
    Rational,
    omega,
    quadratic_field,
    rational_roots,
    rational_sqrt,
    solve_quadratic,
)
from .poly import MultiPoly, format_poly, parse_poly

__all__ = [
    "FieldElem", "MultiPoly", "NumberField", "Rational",
    "QQ", "QI", "QOMEGA", "QSQRT5", "QSQRTM3",
    "bareiss_determinant", "discriminant", "format_poly", "gcd_univariate",
    "omega", "parse_poly", "perfect_square_form", "primitive_part", "quadratic_field",
    "rational_roots", "rational_sqrt", "resultant", "roots_in_field",
    "solve_quadratic", "squarefree_part", "sylvester_matrix",
]
