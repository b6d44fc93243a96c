"""Detection of polynomials of the form gamma * (x - r)^k."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from src.polyring.poly import DegenerateInputError, Poly, poly_divrem, poly_gcd


@dataclass(frozen=True)
class LinearPower:
    """f = gamma * (x - root)^k"""
    gamma: Fraction
    root: Fraction
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"multiplicity must be positive, got {self.k}")
        if self.gamma == 0:
            raise ValueError("leading constant must be nonzero")

    def expand(self) -> Poly:
        return Poly.linear_power(self.gamma, self.root, self.k)

    def power(self, k: int) -> Poly:
        """gamma * (x - root)^k for another exponent"""
        return Poly.linear_power(self.gamma, self.root, k)


def radical(f: Poly) -> Poly:
    """Monic f / gcd(f, f')"""
    if f.is_zero:
        raise DegenerateInputError("the zero polynomial has no radical")
    q, _ = poly_divrem(f, poly_gcd(f, f.derivative()))
    return q.monic()


def linear_power_detect(f: Poly) -> Optional[LinearPower]:
    """
    Return (gamma, r, k) with f = gamma * (x - r)^k, or None.

    f has a linear radical exactly when it is a constant times a power of
    one linear factor; the test is exact.
    """
    if f.is_zero or f.is_constant:
        raise DegenerateInputError(f"linear power detection needs degree >= 1, got {f}")
    rad = radical(f)
    if rad.degree != 1:
        return None
    root = -rad.coeffs[0]
    found = LinearPower(gamma=f.leading, root=root, k=int(f.degree))
    if found.expand() != f:
        return None
    return found
