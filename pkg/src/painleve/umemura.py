"""
Rational solutions of the third Painleve equation built from Umemura
polynomials, checked by exact substitution into

    y'' = y'^2/y - y'/x + (a y^2 + b)/x + y^3 - 1/y

with a = 2n - 1 + 2c and b = 2n + 1 - 2c.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.painleve.presets import FamilyId, FamilyParams, preset
from src.polyring import DegenerateInputError, Poly, RationalFunction, poly_reverse
from src.recurrence import hirota_generate

logger = logging.getLogger(__name__)

_X = RationalFunction.of(Poly.x())


def umemura_terms(n: int, c: Fraction) -> Tuple[Poly, Poly]:
    """(P_n, P_{n+1}) of the third-equation family at parameter c"""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    report = hirota_generate(preset(FamilyId.P3, FamilyParams(c=Fraction(c))), n + 1)
    if report.zero_term is not None:
        raise ZeroDivisionError(f"P_{report.zero_term} vanishes at c = {c}")
    if report.failure is not None:
        raise ArithmeticError(f"Umemura recurrence failed at n = {report.failure.n}, c = {c}")
    polys = report.polys
    return polys[n], polys[n + 1]


def p3_solution(n: int, c: Fraction) -> RationalFunction:
    """
    y = P_n(1/x, c) P_{n+1}(1/x, c-1) / (P_n(1/x, c-1) P_{n+1}(1/x, c)).

    Each P(1/x) is reverse(P) / x^deg P, so the ratio is the ratio of the
    reversed polynomials times x^(deg den factors - deg num factors).
    """
    c = Fraction(c)
    pn_c, pn1_c = umemura_terms(n, c)
    pn_c1, pn1_c1 = umemura_terms(n, c - 1)
    num_factors = (pn_c, pn1_c1)
    den_factors = (pn_c1, pn1_c)

    num = poly_reverse(num_factors[0]) * poly_reverse(num_factors[1])
    den = poly_reverse(den_factors[0]) * poly_reverse(den_factors[1])
    if den.is_zero:
        raise ZeroDivisionError(f"denominator vanishes after 1/x substitution (n = {n}, c = {c})")
    offset = sum(int(p.degree) for p in den_factors) - sum(int(p.degree) for p in num_factors)
    if offset > 0:
        num = num * Poly.monomial(1, offset)
    elif offset < 0:
        den = den * Poly.monomial(1, -offset)
    return RationalFunction(num, den)


def p3_ode_residual(y: RationalFunction, a: Fraction, b: Fraction) -> RationalFunction:
    """y'' - y'^2/y + y'/x - (a y^2 + b)/x - y^3 + 1/y"""
    if y.is_zero:
        raise DegenerateInputError("the third Painleve residual needs y != 0")
    a, b = Fraction(a), Fraction(b)
    y1 = y.derivative()
    y2 = y1.derivative()
    return y2 - y1 * y1 / y + y1 / _X - (y * y * a + b) / _X - y ** 3 + 1 / y


@dataclass(frozen=True)
class OdeCheck:
    n: int
    c: Fraction
    a: Fraction
    b: Fraction
    residual: RationalFunction
    pass_: bool

    def __post_init__(self) -> None:
        if self.a + self.b != 4 * self.n:
            raise ArithmeticError(f"a + b = {self.a + self.b} but 4n = {4 * self.n}")


def p3_parameters(n: int, c: Fraction) -> Tuple[Fraction, Fraction]:
    c = Fraction(c)
    return 2 * n - 1 + 2 * c, 2 * n + 1 - 2 * c


def verify_p3(n: int, c: Fraction) -> OdeCheck:
    """
    Substitute the n-th rational solution at parameter c into the third
    Painleve equation with parameters p3_parameters(n, c).

    Args:
        n: Index of the solution, n >= 0
        c: Rational family parameter

    Returns:
        OdeCheck whose residual is the exact rational function left over

    Raises:
        ZeroDivisionError: If a term needed for the solution vanishes at c
    """
    c = Fraction(c)
    a, b = p3_parameters(n, c)
    residual = p3_ode_residual(p3_solution(n, c), a, b)
    check = OdeCheck(n=n, c=c, a=a, b=b, residual=residual, pass_=residual.is_zero)
    if not check.pass_:
        logger.warning("third Painleve residual nonzero for n = %d, c = %s: %s", n, c, residual)
    return check


def verify_p3_grid(ns: Sequence[int], cs: Sequence[Fraction], workers: int = 1) -> List[OdeCheck]:
    """verify_p3 over ns x cs, ordered by (n, c) input position"""
    items = [(n, Fraction(c)) for n in ns for c in cs]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda nc: verify_p3(*nc), items))
    return [verify_p3(n, c) for n, c in items]
