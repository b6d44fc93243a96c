"""
Rational functions num/den over Q in reduced, denominator-monic form.

Every constructor path canonicalizes, so two RationalFunctions are equal
exactly when their stored fields are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from src.polyring.poly import ONE, ZERO, Poly, poly_divrem, poly_gcd

Operand = Union["RationalFunction", Poly, int, Fraction]


@dataclass(frozen=True)
class RationalFunction:
    num: Poly = ZERO
    den: Poly = ONE

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = poly_divrem(num, g)[0]
                den = poly_divrem(den, g)[0]
            lc = den.leading
            if lc != 1:
                num = num.scale(1 / lc)
                den = den.scale(1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: Operand) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Poly):
            return cls(value, ONE)
        return cls(Poly.constant(value), ONE)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: Operand) -> "RationalFunction":
        o = RationalFunction.of(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: Operand) -> "RationalFunction":
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other: Operand) -> "RationalFunction":
        return RationalFunction.of(other) - self

    def __mul__(self, other: Operand) -> "RationalFunction":
        o = RationalFunction.of(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> "RationalFunction":
        o = RationalFunction.of(other)
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Operand) -> "RationalFunction":
        return RationalFunction.of(other) / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k)

    def derivative(self) -> "RationalFunction":
        """Quotient rule: (n'd - nd') / d^2"""
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"
