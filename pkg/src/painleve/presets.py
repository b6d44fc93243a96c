"""
Ready-made recurrences for the special polynomials of P_II - P_VI.

Each family is a HirotaSpec transcribed exactly from the table of
bilinear equations; P_VI's h = cx + (n - 1/2)^2 is stored as
p = cx + 1/4 with beta = 1, since (n - 1/2)^2 = n(n-1) + 1/4.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from src.conditions import ResidualReport, modified_residual, star_residual
from src.polyring import ONE, Poly
from src.recurrence import HCoeffs, HirotaSpec


class FamilyId(Enum):
    """Special polynomial families"""
    P2 = "p2"      # Yablonskii-Vorob'ev
    P3 = "p3"      # Umemura, third equation
    P4A = "p4a"    # seeds 1, 1
    P4B = "p4b"    # seeds 1, x
    P5 = "p5"
    P6 = "p6"
    CUSTOM = "custom"


class MissingParameterError(ValueError):
    """Raised when a family needs a parameter that was not supplied"""


@dataclass(frozen=True)
class FamilyParams:
    c: Optional[Fraction] = None
    v: Optional[Fraction] = None

    def require_c(self, family: FamilyId) -> Fraction:
        if self.c is None:
            raise MissingParameterError(f"family {family.value} needs parameter c")
        return Fraction(self.c)

    def require_v(self, family: FamilyId) -> Fraction:
        if self.v is None:
            raise MissingParameterError(f"family {family.value} needs parameter v")
        return Fraction(self.v)


X = Poly.x()


def _p(*coeffs: object) -> Poly:
    return Poly(tuple(Fraction(c) for c in coeffs))  # type: ignore[arg-type]


def preset(family: FamilyId, params: FamilyParams = FamilyParams()) -> HirotaSpec:
    """HirotaSpec for a table family; CUSTOM specs are built by the caller"""
    if family is FamilyId.P2:
        return HirotaSpec(f=_p(-4), g=_p(), h=HCoeffs(p=X), seed0=ONE, seed1=X)
    if family is FamilyId.P3:
        c = params.require_c(family)
        return HirotaSpec(
            f=_p(0, 0, 0, 0, -1), g=_p(0, 0, 0, -1), h=HCoeffs(p=_p(1, c)), seed0=ONE, seed1=ONE
        )
    if family is FamilyId.P4A:
        return HirotaSpec(f=ONE, g=_p(), h=HCoeffs(p=_p(-1, 0, 1), alpha=Fraction(2)), seed0=ONE, seed1=ONE)
    if family is FamilyId.P4B:
        return HirotaSpec(f=ONE, g=_p(), h=HCoeffs(p=_p(0, 0, 1), alpha=Fraction(2)), seed0=ONE, seed1=X)
    if family is FamilyId.P5:
        v = params.require_v(family)
        return HirotaSpec(
            f=X, g=ONE, h=HCoeffs(p=_p(-v, Fraction(1, 8)), alpha=Fraction(3, 8)), seed0=ONE, seed1=ONE
        )
    if family is FamilyId.P6:
        c = params.require_c(family)
        return HirotaSpec(
            f=_p(4, 0, -2, 0, Fraction(1, 4)),
            g=_p(0, -1, 0, Fraction(1, 4)),
            h=HCoeffs(p=_p(Fraction(1, 4), c), beta=Fraction(1)),
            seed0=ONE,
            seed1=ONE,
        )
    raise ValueError("custom families have no preset; build a HirotaSpec directly")


def condition_check(spec: HirotaSpec) -> ResidualReport:
    """The condition that applies to this spec's beta"""
    if spec.h.beta == 0:
        return star_residual(spec.f, spec.g)
    return modified_residual(spec.f, spec.g, spec.h.beta)


def preset_condition_check(family: FamilyId, params: FamilyParams = FamilyParams()) -> ResidualReport:
    """(*) for P2-P5; the beta = 1 modified condition for P6"""
    return condition_check(preset(family, params))
