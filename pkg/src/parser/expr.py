"""
Polynomial expression parser.

Grammar (whitespace-insensitive):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary | <implicit> power)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'x' | '(' expr ')'

Implicit multiplication applies when a factor is directly followed by an
integer, `x` or `(`, so `2x`, `4x^3` and `3(x+1)` parse as products.
The divisor of `/` must evaluate to a nonzero constant.

Every ParseError carries the 0-based offset into the source text.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple

from src.polyring import Poly

VARIABLE = "x"


class ParseError(ValueError):
    """Malformed polynomial expression"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class Token(NamedTuple):
    kind: str  # "int", "name", "op", "eof"
    text: str
    position: int


_OPERATORS = set("+-*/^()")


def tokenize(text: str) -> List[Token]:
    tokens: List[Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            start = i
            while i < len(text) and text[i].isdigit():
                i += 1
            tokens.append(Token("int", text[start:i], start))
        elif ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("name", text[start:i], start))
        elif ch in _OPERATORS:
            tokens.append(Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("eof", "", len(text)))
    return tokens


class TokenStream:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.index = 0

    def next(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        tok = self.tokens[self.index]
        if tok.kind != "eof":
            self.index += 1
        return tok

    def next_is(self, op: str) -> bool:
        tok = self.next()
        return tok.kind == "op" and tok.text == op

    def eat(self, op: str) -> Token:
        tok = self.next()
        if not self.next_is(op):
            raise ParseError(f"expected {op!r}, found {_describe(tok)}", tok.position)
        return self.advance()

    def check_eof(self) -> None:
        tok = self.next()
        if tok.kind != "eof":
            raise ParseError(f"unexpected {_describe(tok)}", tok.position)


def _describe(tok: Token) -> str:
    return "end of input" if tok.kind == "eof" else repr(tok.text)


def _starts_atom(tok: Token) -> bool:
    return tok.kind in ("int", "name") or (tok.kind == "op" and tok.text == "(")


def _parse_expr(ts: TokenStream) -> Poly:
    total = _parse_term(ts)
    while ts.next_is("+") or ts.next_is("-"):
        op = ts.advance().text
        rhs = _parse_term(ts)
        total = total + rhs if op == "+" else total - rhs
    return total


def _parse_term(ts: TokenStream) -> Poly:
    value = _parse_unary(ts)
    while True:
        if ts.next_is("*"):
            ts.advance()
            value = value * _parse_unary(ts)
        elif ts.next_is("/"):
            ts.advance()
            position = ts.next().position
            divisor = _parse_unary(ts)
            if not divisor.is_constant:
                raise ParseError("division by a non-constant expression", position)
            if divisor.is_zero:
                raise ParseError("division by zero", position)
            value = value.scale(1 / divisor.coeff(0))
        elif _starts_atom(ts.next()):
            value = value * _parse_power(ts)
        else:
            return value


def _parse_unary(ts: TokenStream) -> Poly:
    if ts.next_is("-"):
        ts.advance()
        return -_parse_unary(ts)
    if ts.next_is("+"):
        ts.advance()
        return _parse_unary(ts)
    return _parse_power(ts)


def _parse_power(ts: TokenStream) -> Poly:
    base = _parse_atom(ts)
    if ts.next_is("^"):
        ts.advance()
        tok = ts.next()
        if tok.kind != "int":
            raise ParseError(f"exponent must be a nonnegative integer literal, found {_describe(tok)}",
                             tok.position)
        ts.advance()
        return base ** int(tok.text)
    return base


def _parse_atom(ts: TokenStream) -> Poly:
    tok = ts.next()
    if tok.kind == "int":
        ts.advance()
        return Poly.constant(int(tok.text))
    if tok.kind == "name":
        if tok.text != VARIABLE:
            raise ParseError(f"unknown identifier {tok.text!r}", tok.position)
        ts.advance()
        return Poly.x()
    if ts.next_is("("):
        ts.advance()
        inner = _parse_expr(ts)
        ts.eat(")")
        return inner
    raise ParseError(f"expected a number, {VARIABLE!r} or '(', found {_describe(tok)}", tok.position)


def parse_poly(text: str) -> Poly:
    """Exact Poly for an expression such as ``(x^2-4)^2/4`` or ``-5/2x+1``"""
    if not text.strip():
        raise ParseError("empty expression", 0)
    ts = TokenStream(text)
    result = _parse_expr(ts)
    ts.check_eof()
    return result


def parse_rational(text: str) -> Fraction:
    """A constant expression such as ``-5/2``; anything depending on x is rejected"""
    p = parse_poly(text)
    if not p.is_constant:
        raise ParseError("expected a rational constant", 0)
    return p.coeff(0)


@dataclass(frozen=True)
class PolyExpr:
    """Source text with its parsed value"""
    source: str
    poly: Poly

    @classmethod
    def parse(cls, text: str) -> "PolyExpr":
        return cls(source=text, poly=parse_poly(text))
