"""Text frontend: parse human-written polynomial expressions, and print them back.

Grammar (whitespace is ignored, ``*`` is mandatory between factors)::

    expr    := term (('+' | '-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | power
    power   := atom ('^' INTEGER)?          # non-associative: no '^' chains
    atom    := INTEGER ('/' INTEGER)?       # rational literal a/b
             | NAME                         # a declared variable
             | '(' expr ')'

Precedence is therefore ``^`` > unary ``-`` > ``*`` > binary ``+``/``-``.
Exponents are capped at 2**16 to guard against accidental pathologies.
Every syntax error carries the 1-based column where it occurred.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .polyring import Polynomial, order_key

EXPONENT_LIMIT = 2**16

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_NUMBER_RE = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class VarTable:
    """Ordered, distinct variable names; the order fixes the exponent layout."""

    names: tuple[str, ...]

    def __post_init__(self):
        if not self.names:
            raise ParseError("no variables declared", 1)
        seen = set()
        for name in self.names:
            if not _NAME_RE.fullmatch(name):
                raise ParseError(f"invalid variable name {name!r}", 1)
            if name in seen:
                raise ParseError(f"duplicate variable name {name!r}", 1)
            seen.add(name)

    @classmethod
    def from_string(cls, spec: str) -> "VarTable":
        return cls(tuple(part.strip() for part in spec.split(",") if part.strip()))

    @property
    def varcount(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


@dataclass(frozen=True)
class _Token:
    kind: str  # NUMBER | NAME | OP | END
    text: str
    pos: int  # 1-based column


def _tokenize(src: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            m = _NUMBER_RE.match(src, i)
            tokens.append(_Token("NUMBER", m.group(), i + 1))
            i = m.end()
        elif ch.isalpha():
            m = _NAME_RE.match(src, i)
            tokens.append(_Token("NAME", m.group(), i + 1))
            i = m.end()
        elif ch in "+-*^/()":
            tokens.append(_Token("OP", ch, i + 1))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i + 1)
    tokens.append(_Token("END", "", len(src) + 1))
    return tokens


class _Parser:
    def __init__(self, tokens: list[_Token], vars: VarTable):
        self.tokens = tokens
        self.vars = vars
        self.i = 0

    @property
    def token(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, *ops: str) -> bool:
        return self.token.kind == "OP" and self.token.text in ops

    def expr(self) -> Polynomial:
        value = self.term()
        while self.at_op("+", "-"):
            op = self.advance().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.factor()
        while self.at_op("*"):
            self.advance()
            value = value * self.factor()
        return value

    def factor(self) -> Polynomial:
        if self.at_op("-"):
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if not self.at_op("^"):
            return base
        self.advance()
        tok = self.token
        if tok.kind != "NUMBER":
            raise ParseError("malformed exponent: expected a nonnegative integer", tok.pos)
        self.advance()
        exponent = int(tok.text)
        if exponent > EXPONENT_LIMIT:
            raise ParseError(f"exponent {exponent} exceeds the limit 2^16", tok.pos)
        if self.at_op("^"):
            raise ParseError("'^' is non-associative; parenthesize exponent towers", self.token.pos)
        return base**exponent

    def atom(self) -> Polynomial:
        tok = self.token
        if tok.kind == "NUMBER":
            self.advance()
            value = Fraction(int(tok.text))
            if self.at_op("/"):
                self.advance()
                den = self.token
                if den.kind != "NUMBER":
                    raise ParseError("malformed rational literal: expected a denominator", den.pos)
                self.advance()
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.pos)
                value = Fraction(int(tok.text), int(den.text))
            return Polynomial.constant(self.vars.varcount, value)
        if tok.kind == "NAME":
            self.advance()
            if tok.text not in self.vars.names:
                raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
            return Polynomial.variable(self.vars.varcount, self.vars.index(tok.text))
        if self.at_op("("):
            open_pos = tok.pos
            self.advance()
            value = self.expr()
            if not self.at_op(")"):
                raise ParseError(f"unbalanced parenthesis opened at col {open_pos}", self.token.pos)
            self.advance()
            return value
        if tok.kind == "END":
            raise ParseError("unexpected end of input", tok.pos)
        raise ParseError(f"unexpected {tok.text!r}", tok.pos)


def parse(src: str, vars: VarTable) -> Polynomial:
    """Parse ``src`` into a canonical sparse polynomial over ``vars``.

    Pure function of its arguments; raises :class:`ParseError` with a
    position-annotated message on any syntax problem.
    """
    if not src.strip():
        raise ParseError("empty input", 1)
    parser = _Parser(_tokenize(src), vars)
    value = parser.expr()
    if parser.token.kind != "END":
        raise ParseError(f"unexpected {parser.token.text!r}", parser.token.pos)
    return value


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, vars: VarTable | tuple[str, ...]) -> str:
    """Render a polynomial as text the parser accepts (greatest term first)."""
    names = vars.names if isinstance(vars, VarTable) else tuple(vars)
    if len(names) != p.varcount:
        raise ParseError(f"{len(names)} names for {p.varcount} variables", 1)
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for mono, coeff in sorted(p.items(), key=lambda t: order_key(t[0])):
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, mono)
            if e > 0
        ]
        mag = abs(coeff)
        if not factors:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_format_coeff(mag)] + factors)
        if not pieces:
            pieces.append(f"-{body}" if coeff < 0 else body)
        else:
            pieces.append(f"{' - ' if coeff < 0 else ' + '}{body}")
    return "".join(pieces)


def default_names(varcount: int) -> tuple[str, ...]:
    """Fallback variable names for rendering when none were declared."""
    if varcount <= 3:
        return ("x", "y", "z")[:varcount]
    return tuple(f"x{i + 1}" for i in range(varcount))


__all__ = [
    "EXPONENT_LIMIT",
    "VarTable",
    "default_names",
    "format_polynomial",
    "parse",
]
