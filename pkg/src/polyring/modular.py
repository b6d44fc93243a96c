"""Polynomial arithmetic over GF(p), used to certify coprimality cheaply.

If A and B are integer polynomials and p divides neither leading
coefficient, every common factor over Q survives reduction mod p with
its degree intact. A constant gcd mod p therefore proves a constant gcd
over Q. A nonconstant gcd mod p proves nothing and the caller falls back
to the exact computation.
"""
from __future__ import annotations
from typing import List, Sequence

PRIMES = (2_305_843_009_213_693_951, 1_000_000_007, 998_244_353)


def _reduce(a: Sequence[int], p: int) -> List[int]:
    out = [c % p for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def gf_rem(a: List[int], b: List[int], p: int) -> List[int]:
    """Remainder of a by b in GF(p)[x]; b nonzero with trimmed leading term"""
    r = list(a)
    inv = pow(b[-1], -1, p)
    n = len(b) - 1
    while len(r) > n:
        top = r[-1]
        if top:
            c = top * inv % p
            off = len(r) - 1 - n
            for j in range(n + 1):
                r[off + j] = (r[off + j] - c * b[j]) % p
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def gf_gcd_degree(a: List[int], b: List[int], p: int) -> int:
    while b:
        a, b = b, gf_rem(a, b, p)
    return len(a) - 1


def certify_coprime(a: Sequence[int], b: Sequence[int]) -> bool:
    """True only if gcd(a, b) over Q is provably constant"""
    for p in PRIMES:
        if a[-1] % p == 0 or b[-1] % p == 0:
            continue
        return gf_gcd_degree(_reduce(a, p), _reduce(b, p), p) == 0
    return False
