"""
Exact rational roots and square roots.

Rational roots come from the rational root theorem on the primitive
integer form; candidate numerators and denominators are divisors of the
constant and leading coefficients, enumerated by sympy.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional

from sympy import divisors

from src.polyring.poly import DegenerateInputError, Poly, int_primitive


def rational_sqrt(c: Fraction) -> Optional[Fraction]:
    """Nonnegative rational square root of c, or None when irrational"""
    if c < 0:
        return None
    num, den = c.numerator, c.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def rational_roots(p: Poly) -> List[Fraction]:
    """Distinct rational roots of p, ascending"""
    if p.is_zero:
        raise DegenerateInputError("every rational is a root of the zero polynomial")
    a = int_primitive(p.integer_form[0])
    roots: List[Fraction] = []
    shift = 0
    while shift < len(a) and a[shift] == 0:
        shift += 1
    if shift:
        roots.append(Fraction(0))
        a = a[shift:]
    if len(a) <= 1:
        return sorted(roots)
    if len(a) == 2:
        roots.append(Fraction(-a[0], a[1]))
        return sorted(set(roots))
    reduced = Poly.from_ints(a)
    for q in map(int, divisors(abs(a[-1]))):
        for num in map(int, divisors(abs(a[0]))):
            if math.gcd(num, q) != 1:
                continue
            for cand in (Fraction(num, q), Fraction(-num, q)):
                if reduced(cand) == 0:
                    roots.append(cand)
    return sorted(set(roots))
