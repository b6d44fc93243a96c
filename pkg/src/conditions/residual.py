"""
The polynomiality condition and its closed-form solutions.

    (*)       f f'' - f'^2 + 3 f' g - 2 f g' - 2 g^2 = 0
    modified  (*) + 2 beta f = 0

The modified form arises when h_n carries a beta*n(n-1) term: the pivot
-2h_{n-1} + h_n = -h_{n-2} + 2beta feeds back through a factor f. The
constant "+2" variant is not used; every known solution pair (including
the sixth-equation pair) satisfies the "+2f" form and fails "+2".
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List

from src.polyring import DegenerateInputError, Poly, linear_power_detect


@dataclass(frozen=True)
class ResidualReport:
    residual: Poly
    beta: Fraction = Fraction(0)

    @property
    def satisfied(self) -> bool:
        return self.residual.is_zero


def _star(f: Poly, g: Poly) -> Poly:
    f1 = f.derivative()
    f2 = f1.derivative()
    return f * f2 - f1 * f1 + (f1 * g).scale(3) - (f * g.derivative()).scale(2) - (g * g).scale(2)


def star_residual(f: Poly, g: Poly) -> ResidualReport:
    return ResidualReport(residual=_star(f, g), beta=Fraction(0))


def modified_residual(f: Poly, g: Poly, beta: Fraction) -> ResidualReport:
    beta = Fraction(beta)
    return ResidualReport(residual=_star(f, g) + f.scale(2 * beta), beta=beta)


def g_from_u(u: Poly, f: Poly) -> Poly:
    """g = u + f'/2"""
    return u + f.derivative().scale(Fraction(1, 2))


def dedupe_sorted(polys: List[Poly]) -> List[Poly]:
    """Exact-equality dedup, ordered by (degree, coefficients)"""
    return sorted(set(polys), key=lambda p: p.sort_key())


def theorem2_solutions(f: Poly) -> List[Poly]:
    """
    Every polynomial g with star_residual(f, g) = 0.

    Always f'/2; when f = gamma (x - r)^k also gamma (x - r)^(k-1). The
    leading constant gamma is carried explicitly (f = -x^4 is a member
    with gamma = -1). Each g is re-verified before it is returned.
    """
    if f.is_zero:
        raise DegenerateInputError("f = 0: only g = 0 satisfies (*), no solution family")
    candidates = [f.derivative().scale(Fraction(1, 2))]
    if not f.is_constant:
        lp = linear_power_detect(f)
        if lp is not None:
            candidates.append(lp.power(lp.k - 1))
    for g in candidates:
        if not star_residual(f, g).satisfied:
            raise ArithmeticError(f"closed-form solution {g} fails (*) for f = {f}")
    return dedupe_sorted(candidates)


def closed_form_u(f: Poly) -> List[Poly]:
    """The same solutions in the u = g - f'/2 coordinate: 0 and gamma(1 - k/2)(x - r)^(k-1)"""
    half = f.derivative().scale(Fraction(1, 2))
    return dedupe_sorted([g - half for g in theorem2_solutions(f)])
