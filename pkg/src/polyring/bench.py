"""
Micro-benchmark for the schoolbook/Karatsuba crossover.

For each operand length, random integer coefficient lists (bit size
comparable to mid-range Yablonskii-Vorob'ev coefficients) are multiplied
with both kernels. The threshold in `poly.KARATSUBA_THRESHOLD` is the
smallest length at which the Karatsuba kernel wins consistently on a
desktop machine; `bench` reprints the table so it can be re-tuned.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from time import perf_counter
from typing import Callable, List, Sequence

from src.polyring import poly


@dataclass
class BenchRow:
    length: int
    schoolbook_s: float
    karatsuba_s: float
    identical: bool

    @property
    def speedup(self) -> float:
        return self.schoolbook_s / self.karatsuba_s if self.karatsuba_s else float("inf")


def _time(fn: Callable[[], List[int]], repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = perf_counter()
        fn()
        best = min(best, perf_counter() - t0)
    return best


def _forced_karatsuba(a: Sequence[int], b: Sequence[int], threshold: int) -> List[int]:
    saved = poly.KARATSUBA_THRESHOLD
    poly.KARATSUBA_THRESHOLD = threshold
    try:
        return poly._karatsuba(a, b)
    finally:
        poly.KARATSUBA_THRESHOLD = saved


def benchmark_threshold(
    lengths: Sequence[int] = (8, 16, 24, 32, 48, 64, 128, 256),
    bits: int = 256,
    repeats: int = 3,
    seed: int = 1234567890,
) -> List[BenchRow]:
    """
    Time both kernels per operand length.

    The Karatsuba run recurses down to length 8 so that the comparison
    measures the split itself, not the fallback.
    """
    rng = random.Random(seed)
    rows: List[BenchRow] = []
    for n in lengths:
        a = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]
        b = [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]
        school = poly._schoolbook(a, b)
        kara = _forced_karatsuba(a, b, 8)
        rows.append(BenchRow(
            length=n,
            schoolbook_s=_time(lambda: poly._schoolbook(a, b), repeats),
            karatsuba_s=_time(lambda: _forced_karatsuba(a, b, 8), repeats),
            identical=school == kara,
        ))
    return rows
