"""
Dense univariate polynomials over the rationals.

Coefficients are `fractions.Fraction` values stored in ascending degree
order with the highest stored coefficient nonzero. The zero polynomial is
the empty tuple; its degree is `DEGREE_OF_ZERO` (negative infinity), so
degree comparisons and sums behave without special cases at call sites.

Heavy operations (multiplication, division, gcd) run on integer
coefficient lists after clearing denominators and only convert back to
fractions at the end.

Example:
    >>> p = Poly.from_ints([4, 0, 0, 1])      # x^3 + 4
    >>> q, r = poly_divrem(p * Poly.x(), Poly.x())
    >>> q == p and r.is_zero
    True
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from typing import Iterable, List, Sequence, Tuple, Union

from src.polyring import modular

Rational = Fraction
Scalar = Union[int, Fraction]

DEGREE_OF_ZERO = float("-inf")

# Below this operand length schoolbook multiplication wins; chosen with
# `python -m src.cli bench` (see src/polyring/bench.py). Results never
# depend on it.
KARATSUBA_THRESHOLD = 32


class DegenerateInputError(ValueError):
    """Raised when an operation receives a zero or constant polynomial it cannot handle"""


@dataclass(frozen=True)
class Poly:
    """Immutable polynomial in x with exact rational coefficients"""
    coeffs: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # -- constructors -------------------------------------------------

    @classmethod
    def _trusted(cls, coeffs: Sequence[Fraction]) -> "Poly":
        """Build from already-trimmed Fractions without re-normalizing"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @classmethod
    def from_ints(cls, ints: Sequence[int], den: int = 1) -> "Poly":
        """Polynomial with coefficients ints[i] / den"""
        if den == 1:
            cs = [Fraction(c) for c in ints]
        else:
            cs = [Fraction(c, den) for c in ints]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls._trusted(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "Poly":
        return cls._trusted((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, c: Scalar, k: int) -> "Poly":
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls((Fraction(0),) * k + (Fraction(c),))

    @classmethod
    def linear_power(cls, gamma: Scalar, root: Scalar, k: int) -> "Poly":
        """Expand gamma * (x - root)^k"""
        base = cls((Fraction(-Fraction(root)), Fraction(1)))
        return (base ** k).scale(gamma)

    # -- basic properties ---------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> Union[int, float]:
        """len(coeffs) - 1, or DEGREE_OF_ZERO for the zero polynomial"""
        if not self.coeffs:
            return DEGREE_OF_ZERO
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    @cached_property
    def integer_form(self) -> Tuple[Tuple[int, ...], int]:
        """(ints, den) with self == ints / den and den the lcm of denominators"""
        den = 1
        for c in self.coeffs:
            d = c.denominator
            if d != 1:
                den = den * d // math.gcd(den, d)
        if den == 1:
            return tuple(c.numerator for c in self.coeffs), 1
        return tuple(c.numerator * (den // c.denominator) for c in self.coeffs), den

    @property
    def denominator_lcm(self) -> int:
        return self.integer_form[1]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: object) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(tuple(out))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._trusted([-c for c in self.coeffs])

    def __sub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> "Poly":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other: object) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = Fraction(c)
        if c == 0:
            return ZERO
        return Poly._trusted([c * a for a in self.coeffs])

    def __call__(self, value: Scalar) -> Fraction:
        """Evaluate at a rational point (Horner)"""
        acc = Fraction(0)
        v = Fraction(value)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def monic(self) -> "Poly":
        if self.is_zero:
            raise DegenerateInputError("the zero polynomial has no monic form")
        return self.scale(1 / self.leading)

    def derivative(self) -> "Poly":
        return poly_derivative(self)

    def divrem(self, d: "Poly") -> Tuple["Poly", "Poly"]:
        return poly_divrem(self, d)

    def __floordiv__(self, d: "Poly") -> "Poly":
        return poly_divrem(self, d)[0]

    def __mod__(self, d: "Poly") -> "Poly":
        return poly_divrem(self, d)[1]

    def sort_key(self) -> Tuple[Union[int, float], Tuple[Fraction, ...]]:
        """Ordering used for deterministic solution lists: degree, then coefficients"""
        return (self.degree, tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"


ZERO = Poly._trusted(())
ONE = Poly._trusted((Fraction(1),))


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly) -> str:
    """Plain text, descending powers, e.g. ``-5/2*x^2+x-1/3``; parses back exactly"""
    if p.is_zero:
        return "0"
    parts: List[str] = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = format_rational(mag)
        else:
            mono = "x" if k == 1 else f"x^{k}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(sign + body)
    return "".join(parts)


# -- integer coefficient kernels ----------------------------------------

def _schoolbook(a: Sequence[int], b: Sequence[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _add_lists(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _karatsuba(a: Sequence[int], b: Sequence[int]) -> List[int]:
    if len(a) < len(b):
        a, b = b, a
    if len(b) < KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)
    m = len(a) // 2
    out = [0] * (len(a) + len(b) - 1)
    if len(b) <= m:
        # unbalanced: multiply b against slices of a
        for start in range(0, len(a), len(b)):
            part = _karatsuba(a[start:start + len(b)], b)
            for i, c in enumerate(part):
                out[start + i] += c
        return out
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    z1 = _karatsuba(_add_lists(a0, a1), _add_lists(b0, b1))
    for i, c in enumerate(z0):
        out[i] += c
        z1[i] -= c
    for i, c in enumerate(z2):
        out[i + 2 * m] += c
        z1[i] -= c
    for i, c in enumerate(z1):
        if c:
            out[i + m] += c
    return out


def int_mul(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Product of integer coefficient lists; Karatsuba above KARATSUBA_THRESHOLD"""
    if not a or not b:
        return []
    if min(len(a), len(b)) < KARATSUBA_THRESHOLD:
        return _schoolbook(a, b)
    return _karatsuba(a, b)


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def int_primitive(a: Sequence[int]) -> List[int]:
    """Divide out the content and make the leading coefficient positive"""
    out = _trim(list(a))
    if not out:
        return out
    g = reduce(math.gcd, out)
    if out[-1] < 0:
        g = -g
    if g != 1:
        out = [c // g for c in out]
    return out


def int_prem(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Pseudo-remainder of a by b over the integers (b nonzero)"""
    r = list(a)
    lc = b[-1]
    n = len(b) - 1
    for i in range(len(a) - 1, n - 1, -1):
        if i >= len(r):
            continue
        top = r[i]
        if top:
            r = [lc * c for c in r[:i]]
            off = i - n
            for j in range(n):
                r[off + j] -= top * b[j]
        else:
            r = r[:i]
    return _trim(r)


# -- public operations --------------------------------------------------

def poly_mul(p: Poly, q: Poly) -> Poly:
    if p.is_zero or q.is_zero:
        return ZERO
    a, da = p.integer_form
    b, db = q.integer_form
    return Poly.from_ints(int_mul(a, b), da * db)


def poly_divrem(p: Poly, d: Poly) -> Tuple[Poly, Poly]:
    """
    Exact division with remainder over the rationals.

    Returns (q, r) with p = q*d + r and degree(r) < degree(d). The loop
    runs on integers and rescales the running remainder only when the
    divisor's leading coefficient does not divide the current top term.
    """
    if d.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if p.degree < d.degree:
        return ZERO, p
    A, da = p.integer_form
    D, dd = d.integer_form
    n = len(D) - 1
    lc = D[-1]
    r = list(A)
    scale = 1
    q_num = [0] * (len(A) - n)
    q_den = [1] * (len(A) - n)
    for i in range(len(A) - 1, n - 1, -1):
        top = r[i]
        if top == 0:
            continue
        g = math.gcd(top, lc)
        mult = abs(lc) // g
        if mult != 1:
            for k in range(i + 1):
                r[k] *= mult
            scale *= mult
            top = r[i]
        c = top // lc
        q_num[i - n] = c
        q_den[i - n] = scale
        off = i - n
        for j in range(n + 1):
            r[off + j] -= c * D[j]
    quotient = Poly(tuple(Fraction(c * dd, s * da) for c, s in zip(q_num, q_den)))
    remainder = Poly.from_ints(_trim(r[:n]), scale * da)
    return quotient, remainder


def poly_derivative(p: Poly) -> Poly:
    return Poly._trusted([c * i for i, c in enumerate(p.coeffs)][1:])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """
    Monic greatest common divisor.

    A modular check certifies the common coprime case cheaply; otherwise
    the primitive polynomial remainder sequence over the integers decides.
    """
    if p.is_zero and q.is_zero:
        raise DegenerateInputError("gcd(0, 0) is undefined")
    if q.is_zero:
        return p.monic()
    if p.is_zero:
        return q.monic()
    if p.is_constant or q.is_constant:
        return ONE
    a = int_primitive(p.integer_form[0])
    b = int_primitive(q.integer_form[0])
    if modular.certify_coprime(a, b):
        return ONE
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = int_primitive(int_prem(a, b))
        a, b = b, r
    return Poly.from_ints(a).monic()


def is_coprime(p: Poly, q: Poly) -> bool:
    """True when gcd(p, q) is a nonzero constant"""
    return poly_gcd(p, q).degree == 0


def is_squarefree(p: Poly) -> bool:
    """True when gcd(p, p') is constant; nonzero constants count as squarefree"""
    if p.is_constant:
        return not p.is_zero
    return is_coprime(p, p.derivative())


def poly_reverse(p: Poly) -> Poly:
    """x^deg(p) * p(1/x) for the stored degree"""
    return Poly(tuple(reversed(p.coeffs)))


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = ZERO
    for p in polys:
        total = total + p
    return total
