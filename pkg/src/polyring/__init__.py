"""
Polyring Module

Exact rational scalars, dense univariate polynomials and rational
functions in x.
"""

from fractions import Fraction as Rational

from .poly import (
    DEGREE_OF_ZERO,
    KARATSUBA_THRESHOLD,
    ONE,
    ZERO,
    DegenerateInputError,
    Poly,
    format_poly,
    format_rational,
    is_coprime,
    is_squarefree,
    poly_derivative,
    poly_divrem,
    poly_gcd,
    poly_mul,
    poly_reverse,
)
from .linear_power import LinearPower, linear_power_detect, radical
from .ratfun import RationalFunction
from .roots import rational_roots, rational_sqrt

__all__ = [
    "Rational",
    "DEGREE_OF_ZERO",
    "KARATSUBA_THRESHOLD",
    "ONE",
    "ZERO",
    "DegenerateInputError",
    "Poly",
    "format_poly",
    "format_rational",
    "is_coprime",
    "is_squarefree",
    "poly_derivative",
    "poly_divrem",
    "poly_gcd",
    "poly_mul",
    "poly_reverse",
    "LinearPower",
    "linear_power_detect",
    "radical",
    "RationalFunction",
    "rational_roots",
    "rational_sqrt",
]
