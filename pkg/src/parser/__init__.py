"""
Parser Module

Text syntax for polynomials and rational constants.
"""

from .expr import ParseError, PolyExpr, parse_poly, parse_rational, tokenize

__all__ = ["ParseError", "PolyExpr", "parse_poly", "parse_rational", "tokenize"]
