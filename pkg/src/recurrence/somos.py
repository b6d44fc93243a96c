"""
Somos-k sequences over exact rationals.

    a_n a_{n-k} = sum_{j=1}^{floor(k/2)} a_{n-j} a_{n-k+j}

Terms are Fractions throughout; integrality is a predicate evaluated
after the fact (denominator == 1), never assumed.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence

from src.recurrence.hirota import InvalidSpecError

logger = logging.getLogger(__name__)


class SomosDivisionError(ZeroDivisionError):
    """A term needed as divisor is zero"""

    def __init__(self, index: int, divisor_index: int):
        super().__init__(f"a_{index} needs division by a_{divisor_index} = 0")
        self.index = index
        self.divisor_index = divisor_index


@dataclass(frozen=True)
class SomosSpec:
    k: int
    N: int
    seeds: Sequence[Fraction] = field(default=())

    def __post_init__(self) -> None:
        if self.k < 4:
            raise InvalidSpecError(f"Somos-k needs k >= 4, got {self.k}")
        seeds = tuple(Fraction(s) for s in self.seeds) or (Fraction(1),) * self.k
        if len(seeds) != self.k:
            raise InvalidSpecError(f"Somos-{self.k} needs {self.k} seeds, got {len(seeds)}")
        if any(s == 0 for s in seeds):
            raise InvalidSpecError("Somos seeds must be nonzero")
        if self.N < 0:
            raise InvalidSpecError(f"horizon must be nonnegative, got {self.N}")
        object.__setattr__(self, "seeds", seeds)


def somos_generate(spec: SomosSpec) -> List[Fraction]:
    """Exact terms a_0..a_N"""
    k = spec.k
    terms: List[Fraction] = list(spec.seeds)[: spec.N + 1]
    for n in range(k, spec.N + 1):
        divisor = terms[n - k]
        if divisor == 0:
            raise SomosDivisionError(n, n - k)
        total = sum((terms[n - j] * terms[n - k + j] for j in range(1, k // 2 + 1)), Fraction(0))
        terms.append(total / divisor)
    return terms


def is_integral(a: Fraction) -> bool:
    return a.denominator == 1


def somos_first_noninteger(spec: SomosSpec) -> Optional[int]:
    """Smallest n <= N with a_n not an integer, or None"""
    for n, a in enumerate(somos_generate(spec)):
        if not is_integral(a):
            logger.info("Somos-%d: a_%d = %s is not an integer", spec.k, n, a)
            return n
    return None
