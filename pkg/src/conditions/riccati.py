"""
Coefficient-descent solver for polynomial u with

    f u' - (f'/2) u + u^2 = beta f

Substituting g = u + f'/2 turns the (modified) polynomiality condition
into this Riccati-type equation. All polynomial solutions are found by
exhausting candidate degrees d = deg u:

* For d > max(deg f, 1) the u^2 term alone dominates, so no solution.
* Otherwise the top equation coefficient fixes the leading coefficient
  (a quadratic when u^2 reaches the top degree, linear otherwise).
* Each lower coefficient of u enters its equation coefficient linearly
  with a rational multiplier. Where that multiplier vanishes (a
  resonance) the coefficient becomes a free parameter t; the remaining
  equations are then polynomial in t and their common rational roots
  give the solutions.

Branches that die record (description, equation coefficient index).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, NamedTuple, Optional, Tuple

from src.conditions.residual import dedupe_sorted
from src.polyring import (
    ZERO,
    DegenerateInputError,
    Poly,
    poly_gcd,
    rational_roots,
    rational_sqrt,
)

logger = logging.getLogger(__name__)

# u coefficients are polynomials in the resonance parameter t
_T = Poly.x()


class ContradictionTrace(NamedTuple):
    branch: str
    coefficient: int


def riccati_lhs(f: Poly, u: Poly, beta: Fraction) -> Poly:
    """f u' - (f'/2) u + u^2 - beta f"""
    return f * u.derivative() - (f.derivative() * u).scale(Fraction(1, 2)) + u * u - f.scale(beta)


@dataclass
class RiccatiSolutionSet:
    f: Poly
    beta: Fraction
    solutions: List[Poly]
    contradiction_traces: List[ContradictionTrace] = field(default_factory=list)
    unresolved_families: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        for u in self.solutions:
            if not riccati_lhs(self.f, u, self.beta).is_zero:
                raise ArithmeticError(f"descent produced a non-solution u = {u} for f = {self.f}")

    @property
    def has_solutions(self) -> bool:
        return bool(self.solutions)


@dataclass
class _Branch:
    d: int
    coeffs: List[Optional[Poly]]
    j: int
    desc: str
    has_param: bool = False
    lead_is_param: bool = False
    constraints: List[Tuple[int, Poly]] = field(default_factory=list)


def _level(f: Poly, beta: Fraction, coeffs: List[Optional[Poly]], s: int) -> Poly:
    """Coefficient of x^s in riccati_lhs with unknown u-coefficients counted as zero"""
    fc = f.coeffs
    m = len(fc) - 1
    d = len(coeffs) - 1
    total = ZERO
    for i, ui in enumerate(coeffs):
        if ui is None:
            continue
        k = s - i + 1
        if 0 <= k <= m and fc[k]:
            w = fc[k] * (i - Fraction(k, 2))
            if w:
                total = total + ui.scale(w)
    for a in range(max(0, s - d), min(s, d) + 1):
        ua, ub = coeffs[a], coeffs[s - a]
        if ua is not None and ub is not None:
            total = total + ua * ub
    if beta and 0 <= s <= m:
        total = total - f.coeffs[s] * beta
    return total


def _linear_multiplier(f: Poly, coeffs: List[Optional[Poly]], s: int, idx: int) -> Poly:
    """d/du_idx of the level-s coefficient, excluding the u_idx^2 term"""
    fc = f.coeffs
    m = len(fc) - 1
    total = ZERO
    k = s - idx + 1
    if 0 <= k <= m and fc[k]:
        total = total + (fc[k] * (idx - Fraction(k, 2)))
    partner = s - idx
    if partner != idx and 0 <= partner < len(coeffs) and coeffs[partner] is not None:
        total = total + coeffs[partner].scale(2)  # type: ignore[union-attr]
    return total


def _top_degree(m: int, d: int, beta: Fraction) -> int:
    top = max(2 * d, m + d - 1)
    if beta:
        top = max(top, m)
    return top


def _run_branch(
    f: Poly, beta: Fraction, top: int, br: _Branch,
    pending: List[_Branch], solutions: List[Poly], traces: List[ContradictionTrace],
    unresolved: List[str],
) -> None:
    d = br.d
    while br.j <= d:
        s = top - br.j
        idx = d - br.j
        K = _level(f, beta, br.coeffs, s)
        L = _linear_multiplier(f, br.coeffs, s, idx)
        quadratic = 2 * idx == s
        if quadratic:
            # only the leading coefficient can appear squared at its own level
            if not (K.is_constant and L.is_constant):
                traces.append(ContradictionTrace(f"{br.desc}: non-constant leading equation", s))
                return
            a, b, c = Fraction(1), L.coeff(0), K.coeff(0)
            disc = b * b - 4 * a * c
            root = rational_sqrt(disc)
            if root is None:
                traces.append(ContradictionTrace(f"{br.desc}: leading coefficient irrational", s))
                return
            leads = sorted({(-b + root) / (2 * a), (-b - root) / (2 * a)} - {Fraction(0)})
            if not leads:
                traces.append(ContradictionTrace(f"{br.desc}: leading coefficient forced to zero", s))
                return
            for lead in leads:
                coeffs = list(br.coeffs)
                coeffs[idx] = Poly.constant(lead)
                pending.append(_Branch(d=d, coeffs=coeffs, j=br.j + 1,
                                       desc=f"{br.desc}, lead {lead}"))
            return
        if not L.is_zero:
            if not L.is_constant:
                traces.append(ContradictionTrace(f"{br.desc}: parameter-dependent multiplier", s))
                return
            value = (-K).scale(1 / L.coeff(0))
            if br.j == 0 and value.is_zero:
                traces.append(ContradictionTrace(f"{br.desc}: leading coefficient forced to zero", s))
                return
            br.coeffs[idx] = value
            br.j += 1
            continue
        # resonance: u_idx drops out of its own equation coefficient
        if not K.is_zero:
            if K.is_constant:
                traces.append(ContradictionTrace(br.desc, s))
                return
            br.constraints.append((s, K))
        if br.has_param:
            traces.append(ContradictionTrace(f"{br.desc}: second free coefficient", s))
            return
        br.coeffs[idx] = _T
        br.has_param = True
        br.lead_is_param = br.j == 0
        br.j += 1

    for s in range(top - d - 1, -1, -1):
        rest = _level(f, beta, br.coeffs, s)
        if rest.is_zero:
            continue
        if rest.is_constant:
            traces.append(ContradictionTrace(br.desc, s))
            return
        br.constraints.append((s, rest))

    if not br.has_param:
        solutions.append(Poly(tuple(c.coeff(0) for c in br.coeffs)))  # type: ignore[union-attr]
        return
    live = [(s, c) for s, c in br.constraints if not c.is_zero]
    if not live:
        unresolved.append(br.desc)
        logger.warning("one-parameter family of solutions left unresolved: %s", br.desc)
        return
    g = live[0][1]
    for _, c in live[1:]:
        g = poly_gcd(g, c)
    first_level = live[0][0]
    if g.is_constant:
        traces.append(ContradictionTrace(f"{br.desc}: parameter constraints inconsistent", first_level))
        return
    values = rational_roots(g)
    if br.lead_is_param:
        values = [t for t in values if t != 0]
    if not values:
        traces.append(ContradictionTrace(f"{br.desc}: no rational parameter value", first_level))
        return
    for t in values:
        solutions.append(Poly(tuple(c(t) for c in br.coeffs)))  # type: ignore[misc]


def riccati_descent(f: Poly, beta: Fraction = Fraction(0)) -> RiccatiSolutionSet:
    """
    All polynomial u with f u' - (f'/2) u + u^2 = beta f.

    Every candidate degree up to max(deg f, 1) is explored and every
    returned u is re-checked against the equation. Dead branches are kept
    as contradiction traces.

    Args:
        f: Nonzero polynomial coefficient
        beta: Right-hand scale; 0 gives the unmodified condition

    Returns:
        RiccatiSolutionSet with the solutions sorted and deduplicated

    Raises:
        DegenerateInputError: If f is the zero polynomial
    """
    if f.is_zero:
        raise DegenerateInputError("riccati_descent needs f != 0")
    beta = Fraction(beta)
    m = int(f.degree)
    solutions: List[Poly] = []
    traces: List[ContradictionTrace] = []
    unresolved: List[str] = []
    if beta == 0:
        solutions.append(ZERO)
    else:
        traces.append(ContradictionTrace("u = 0", m))
    for d in range(0, max(m, 1) + 1):
        top = _top_degree(m, d, beta)
        pending = [_Branch(d=d, coeffs=[None] * (d + 1), j=0, desc=f"deg u = {d}")]
        while pending:
            _run_branch(f, beta, top, pending.pop(), pending, solutions, traces, unresolved)
    for t in traces:
        logger.debug("contradiction for f = %s: %s at x^%d", f, t.branch, t.coefficient)
    return RiccatiSolutionSet(
        f=f, beta=beta, solutions=dedupe_sorted(solutions),
        contradiction_traces=traces, unresolved_families=unresolved,
    )
