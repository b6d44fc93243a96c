"""
Hirota bilinear recurrence engine

Generates P_0, P_1, ... from

    P_{n+1} P_{n-1} = f (P_n P_n'' - P_n'^2) + g P_n P_n' + h_n P_n^2

with exact division at every step. A nonzero remainder is returned as a
StepFailure (data, not an exception): it is the observable witness for
the converse direction of the polynomiality criterion.

Index convention: P_{n+1} is formed with h_n, the n of P_n on the
right-hand side.

Cost grows quickly: for the Yablonskii-Vorob'ev family deg P_n is
n(n+1)/2, so step n multiplies polynomials of degree ~n^2/2 with
coefficients of growing bit size.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from src.polyring import Poly, is_coprime, is_squarefree, poly_divrem, poly_gcd

logger = logging.getLogger(__name__)


class InvalidSpecError(ValueError):
    """Raised when a recurrence specification violates its construction invariants"""


@dataclass(frozen=True)
class HCoeffs:
    """h_n = p(x) + alpha*n + beta*n(n-1)"""
    p: Poly
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))


def h_at(h: HCoeffs, n: int) -> Poly:
    if n < 0:
        raise ValueError(f"h_n is defined for n >= 0, got {n}")
    return h.p + (h.alpha * n + h.beta * n * (n - 1))


@dataclass(frozen=True)
class HirotaSpec:
    """A full recurrence instance: f, g, h-coefficients and the two seeds"""
    f: Poly
    g: Poly
    h: HCoeffs
    seed0: Poly
    seed1: Poly

    def __post_init__(self) -> None:
        if self.f.is_zero and self.g.is_zero and self.h.p.is_zero:
            raise InvalidSpecError("f, g and h.p are all zero")
        if self.seed0.is_zero or self.seed1.is_zero:
            raise InvalidSpecError("seeds must be nonzero polynomials")
        common = _common_factor(self.f, self.g, self.h.p)
        if common is not None and common.degree > 0:
            raise InvalidSpecError(f"f, g and h.p share the factor {common}")


def _common_factor(*polys: Poly) -> Optional[Poly]:
    acc: Optional[Poly] = None
    for p in polys:
        if p.is_zero:
            continue
        acc = p.monic() if acc is None else poly_gcd(acc, p)
    return acc


@dataclass(frozen=True)
class StepFailure:
    """P_n could not be formed: the right-hand side left a nonzero remainder"""
    n: int
    remainder: Poly
    divisor: Poly


@dataclass
class StepCheck:
    """Outcome of the three per-step assertions of a certificate run"""
    n: int
    divides: bool
    coprime: bool
    squarefree: bool

    @property
    def passed(self) -> bool:
        return self.divides and self.coprime and self.squarefree


@dataclass
class SequenceReport:
    """
    Generated terms with evidence.

    coprimality_flags[i] is gcd(P_i, P_{i+1}) constant; squarefree_flags[i]
    is gcd(P_i, P_i') constant. When `failure` is set, entries hold
    P_0..P_{failure.n - 1}.
    """
    entries: List[Tuple[int, Poly]]
    degrees: List[int]
    coprimality_flags: List[bool]
    squarefree_flags: List[bool]
    failure: Optional[StepFailure] = None
    zero_term: Optional[int] = None
    strict: bool = False
    checks: List[StepCheck] = field(default_factory=list)

    @property
    def polys(self) -> List[Poly]:
        return [p for _, p in self.entries]

    @property
    def is_successful(self) -> bool:
        return self.failure is None and self.zero_term is None

    @property
    def certified(self) -> bool:
        """Every per-step assertion held (strict runs only)"""
        return (
            self.strict
            and self.is_successful
            and all(self.coprimality_flags)
            and all(self.squarefree_flags)
            and all(c.passed for c in self.checks)
        )

    @property
    def first_violation(self) -> Optional[int]:
        for c in self.checks:
            if not c.passed:
                return c.n
        return None


def hirota_rhs(spec: HirotaSpec, P: Poly, n: int) -> Poly:
    """f (P P'' - P'^2) + g P P' + h_n P^2"""
    if P.is_zero:
        raise ValueError("hirota_rhs needs a nonzero P")
    d1 = P.derivative()
    d2 = d1.derivative()
    total = h_at(spec.h, n) * (P * P)
    if not spec.f.is_zero:
        total = total + spec.f * (P * d2 - d1 * d1)
    if not spec.g.is_zero:
        total = total + spec.g * (P * d1)
    return total


def hirota_step(spec: HirotaSpec, P_prev: Poly, P: Poly, n: int) -> Union[Poly, StepFailure]:
    """P_{n+1} = hirota_rhs(P_n) / P_{n-1}, or the StepFailure for index n+1"""
    if P_prev.is_zero:
        raise ZeroDivisionError(f"P_{n - 1} is the zero polynomial")
    quotient, remainder = poly_divrem(hirota_rhs(spec, P, n), P_prev)
    if not remainder.is_zero:
        return StepFailure(n=n + 1, remainder=remainder, divisor=P_prev)
    return quotient


def _degree(p: Poly) -> int:
    return int(p.degree) if not p.is_zero else -1


def hirota_generate(spec: HirotaSpec, N: int, strict: bool = False) -> SequenceReport:
    """
    Generate P_0..P_N with per-step coprimality and squarefree flags.

    Each step divides hirota_rhs(P_n) by P_{n-1} exactly. A nonzero
    remainder stops the run and is stored as the report's failure rather
    than raised; a zero term stops it as well, since the next division
    would be undefined. Flag violations are logged and recorded but do not
    stop generation.

    Args:
        spec: Recurrence coefficients and the two seeds
        N: Index of the last term to produce (N >= 1)
        strict: Also record a StepCheck for every step

    Returns:
        SequenceReport holding P_0..P_N, or the prefix before the failure
    """
    if N < 1:
        raise ValueError(f"horizon must be at least 1, got {N}")
    entries: List[Tuple[int, Poly]] = [(0, spec.seed0), (1, spec.seed1)]
    report = SequenceReport(
        entries=entries,
        degrees=[_degree(spec.seed0), _degree(spec.seed1)],
        coprimality_flags=[is_coprime(spec.seed0, spec.seed1)],
        squarefree_flags=[is_squarefree(spec.seed0), is_squarefree(spec.seed1)],
        strict=strict,
    )
    if not report.coprimality_flags[0]:
        logger.warning("seeds P_0 and P_1 share a factor")
    for n in range(1, N):
        prev, cur = entries[n - 1][1], entries[n][1]
        step = hirota_step(spec, prev, cur, n)
        if isinstance(step, StepFailure):
            logger.warning(
                "P_%d is not a polynomial: remainder of degree %s", step.n, step.remainder.degree
            )
            report.failure = step
            if strict:
                report.checks.append(StepCheck(n=n + 1, divides=False, coprime=False, squarefree=False))
            break
        if step.is_zero:
            logger.warning("P_%d vanished; stopping", n + 1)
            report.zero_term = n + 1
            break
        coprime = is_coprime(cur, step)
        squarefree = is_squarefree(step)
        if not coprime:
            logger.warning("gcd(P_%d, P_%d) is not constant", n, n + 1)
        if not squarefree:
            logger.warning("P_%d has a repeated factor", n + 1)
        entries.append((n + 1, step))
        report.degrees.append(_degree(step))
        report.coprimality_flags.append(coprime)
        report.squarefree_flags.append(squarefree)
        if strict:
            report.checks.append(StepCheck(n=n + 1, divides=True, coprime=coprime, squarefree=squarefree))
        logger.debug("P_%d: degree %d", n + 1, _degree(step))
    return report


def certificate(spec: HirotaSpec, N: int) -> SequenceReport:
    """
    Strict generation to P_N: every step must divide exactly, stay coprime
    with its predecessor and be squarefree.

    Args:
        spec: Recurrence to certify
        N: Horizon, at least 2

    Returns:
        SequenceReport with one StepCheck per step; `certified` summarizes them
    """
    if N < 2:
        raise ValueError(f"a certificate needs N >= 2, got {N}")
    return hirota_generate(spec, N, strict=True)


def reconstruct_ok(spec: HirotaSpec, report: SequenceReport) -> bool:
    """P_{n+1} P_{n-1} == hirota_rhs(P_n) for every generated step"""
    polys = report.polys
    for n in range(1, len(polys) - 1):
        if polys[n + 1] * polys[n - 1] != hirota_rhs(spec, polys[n], n):
            return False
    return True


__all__ = [
    "HCoeffs",
    "HirotaSpec",
    "InvalidSpecError",
    "SequenceReport",
    "StepCheck",
    "StepFailure",
    "certificate",
    "h_at",
    "hirota_generate",
    "hirota_rhs",
    "hirota_step",
    "reconstruct_ok",
]
