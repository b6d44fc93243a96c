"""
Evidence search for the modified condition at higher degree.

Runs the Riccati descent over random and structured f per degree and
collects every (f, g) pair that admits a solution. Absence of solutions
here is evidence, not proof, for the degree bound deg f <= 4.
"""
from __future__ import annotations

import itertools
import logging
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.conditions.residual import g_from_u
from src.conditions.riccati import RiccatiSolutionSet, riccati_descent
from src.polyring import ONE, Poly

logger = logging.getLogger(__name__)

DEFAULT_ROOT_GRID: Tuple[int, ...] = (-2, -1, 0, 1, 2)
DEFAULT_SCALES: Tuple[Fraction, ...] = (Fraction(1), Fraction(1, 4))


@dataclass
class DegreeSummary:
    degree: int
    candidates: int = 0
    with_solutions: int = 0
    contradictions: int = 0
    pairs: List[Tuple[Poly, Poly]] = field(default_factory=list)


@dataclass
class SearchReport:
    deg_min: int
    deg_max: int
    trials: int
    rng_seed: int
    beta: Fraction
    degrees: List[DegreeSummary] = field(default_factory=list)

    @property
    def total_solutions(self) -> int:
        return sum(len(d.pairs) for d in self.degrees)

    def pairs_for(self, degree: int) -> List[Tuple[Poly, Poly]]:
        for d in self.degrees:
            if d.degree == degree:
                return d.pairs
        return []


def random_poly(rng: random.Random, degree: int, max_num: int = 9, max_den: int = 4) -> Poly:
    coeffs = [Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den)) for _ in range(degree)]
    lead = 0
    while lead == 0:
        lead = rng.randint(-max_num, max_num)
    coeffs.append(Fraction(lead, rng.randint(1, max_den)))
    return Poly(tuple(coeffs))


def structured_candidates(
    degree: int,
    root_grid: Sequence[int] = DEFAULT_ROOT_GRID,
    scales: Sequence[Fraction] = DEFAULT_SCALES,
) -> List[Poly]:
    """gamma * prod (x - r_i) over root multisets from the grid"""
    out: List[Poly] = []
    for roots in itertools.combinations_with_replacement(root_grid, degree):
        base = ONE
        for r in roots:
            base = base * Poly((Fraction(-r), Fraction(1)))
        out.extend(base.scale(s) for s in scales)
    return out


def modified_evidence_search(
    deg_min: int,
    deg_max: int,
    trials: int,
    rng_seed: int,
    beta: Fraction = Fraction(1),
    root_grid: Sequence[int] = DEFAULT_ROOT_GRID,
    scales: Sequence[Fraction] = DEFAULT_SCALES,
    workers: int = 1,
) -> SearchReport:
    """
    Collect (f, g) pairs satisfying the modified condition per degree.

    For each degree the candidates are `trials` random polynomials drawn
    from a generator seeded with (rng_seed, degree), followed by the
    structured products over root_grid and scales. Each candidate is
    solved with riccati_descent; results are merged in candidate order,
    so the report is the same for any worker count.

    Args:
        deg_min: Lowest degree of f (>= 1)
        deg_max: Highest degree of f
        trials: Random candidates per degree (>= 1)
        rng_seed: Seed for the random candidates
        beta: Scale of the modified condition
        root_grid: Integer roots used for the structured candidates
        scales: Leading constants used for the structured candidates
        workers: Thread count for solving candidates

    Returns:
        SearchReport with one DegreeSummary per degree
    """
    if deg_min < 1:
        raise ValueError(f"deg_min must be >= 1, got {deg_min}")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    beta = Fraction(beta)
    report = SearchReport(deg_min=deg_min, deg_max=deg_max, trials=trials, rng_seed=rng_seed, beta=beta)
    for degree in range(deg_min, deg_max + 1):
        rng = random.Random(f"{rng_seed}/{degree}")
        candidates = [random_poly(rng, degree) for _ in range(trials)]
        candidates.extend(structured_candidates(degree, root_grid, scales))
        summary = DegreeSummary(degree=degree, candidates=len(candidates))

        def solve(f: Poly) -> RiccatiSolutionSet:
            return riccati_descent(f, beta)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(solve, candidates))
        else:
            results = [solve(f) for f in candidates]

        seen = set()
        for f, res in zip(candidates, results):
            if res.has_solutions:
                summary.with_solutions += 1
                for u in res.solutions:
                    pair = (f, g_from_u(u, f))
                    if pair not in seen:
                        seen.add(pair)
                        summary.pairs.append(pair)
            else:
                summary.contradictions += 1
        logger.info(
            "degree %d: %d candidates, %d with solutions",
            degree, summary.candidates, summary.with_solutions,
        )
        report.degrees.append(summary)
    return report
