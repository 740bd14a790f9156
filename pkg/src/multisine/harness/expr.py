"""Expression language: AST, recursive-descent parser and printer.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := '-'? power
    power  := atom ('^' factor)?
    atom   := NUMBER | IDENT | IDENT '(' [expr (',' expr)*] ')' | '(' expr ')'

``^`` is right-associative and binds tighter than unary minus, so
``-2^2 == -4`` and ``2^3^2 == 512``.  Numeric literals are kept as exact
fractions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Tuple

from ..errors import MultisineError


class ParseError(MultisineError):
    """Syntax or name error, with the byte offset where it was detected."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"offset {offset}: {message}")


class Expr:
    pass


@dataclass(frozen=True)
class Number(Expr):
    value: Fraction
    text: str = field(default="", compare=False)


@dataclass(frozen=True)
class Name(Expr):
    name: str


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class BinOp(Expr):
    op: str
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Call(Expr):
    name: str
    args: Tuple[Expr, ...]


CONSTANTS = frozenset({
    "pi", "e", "log2", "catalan", "zeta3", "glaisher", "zetaprime_neg1", "euler_gamma",
})

# name -> (min args, max args)
FUNCTIONS = {
    "exp": (1, 1), "log": (1, 1), "sqrt": (1, 1), "sin": (1, 1), "cos": (1, 1),
    "pow": (2, 2),
    "zeta": (1, 1), "eta": (1, 1),
    "S": (2, 2), "S2": (1, 1), "S3": (1, 1), "C3": (1, 1), "S3deriv1": (0, 0),
    "cl2": (1, 1), "li2": (1, 1), "li3": (1, 1), "ti2": (1, 1), "chi2": (1, 1),
    "barnesGratio": (1, 1),
    "D": (1, 1), "Dratio": (1, 1), "E": (1, 1), "gammaAlpha": (2, 2),
    "holcombeProduct": (0, 0), "shiftedAdamchik": (0, 0),
    "ktCatalanOdd": (0, 0), "ktCatalanEven": (0, 0),
    "ktZeta3": (0, 2), "msLimit": (0, 2),
}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^(),])
""", re.VERBOSE)


@dataclass
class _Token:
    kind: str
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> list:
    tokens = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            raise ParseError(f"unexpected character {text[i]!r}", _byte_offset(text, i), text)
        if m.lastgroup != "ws":
            tokens.append(_Token(m.lastgroup, m.group(), _byte_offset(text, i)))
        i = m.end()
    tokens.append(_Token("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Iterable[str]):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0
        self.variables = frozenset(variables)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def error(self, message: str, tok: _Token = None):
        tok = tok or self.peek()
        raise ParseError(message, tok.offset, self.text)

    def expect(self, text: str) -> _Token:
        tok = self.peek()
        if tok.text != text:
            found = repr(tok.text) if tok.kind != "end" else "end of input"
            self.error(f"expected {text!r}, found {found}")
        return self.advance()

    def parse(self) -> Expr:
        node = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek().text in ("*", "/"):
            op = self.advance().text
            node = BinOp(op, node, self.factor())
        return node

    def factor(self) -> Expr:
        if self.peek().text == "-":
            self.advance()
            return Neg(self.power())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek().text == "^":
            self.advance()
            return BinOp("^", base, self.factor())
        return base

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "number":
            self.advance()
            return Number(Fraction(tok.text), tok.text)
        if tok.kind == "ident":
            self.advance()
            if self.peek().text == "(":
                return self.call(tok)
            if tok.text in FUNCTIONS:
                self.error(f"function {tok.text!r} needs an argument list", tok)
            if tok.text not in CONSTANTS and tok.text not in self.variables:
                self.error(f"unknown constant or variable {tok.text!r}", tok)
            return Name(tok.text)
        if tok.text == "(":
            self.advance()
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "end":
            self.error("unexpected end of input")
        self.error(f"unexpected {tok.text!r}")

    def call(self, name_tok: _Token) -> Expr:
        name = name_tok.text
        if name not in FUNCTIONS:
            self.error(f"unknown function {name!r}", name_tok)
        self.expect("(")
        args = []
        if self.peek().text != ")":
            args.append(self.expr())
            while self.peek().text == ",":
                self.advance()
                args.append(self.expr())
        self.expect(")")
        lo, hi = FUNCTIONS[name]
        if not lo <= len(args) <= hi:
            want = str(lo) if lo == hi else f"{lo}..{hi}"
            self.error(f"{name} takes {want} argument(s), got {len(args)}", name_tok)
        return Call(name, tuple(args))


def parse(text: str, variables: Iterable[str] = ()) -> Expr:
    """Parse ``text`` into an :class:`Expr`; ``variables`` are allowed free names."""
    return _Parser(text, variables).parse()


def to_text(node: Expr) -> str:
    """Print ``node`` so that ``parse(to_text(node)) == node``."""
    if isinstance(node, Number):
        return node.text or (str(node.value.numerator) if node.value.denominator == 1
                             else f"({node.value.numerator}/{node.value.denominator})")
    if isinstance(node, Name):
        return node.name
    if isinstance(node, Neg):
        return f"(-({to_text(node.operand)}))"
    if isinstance(node, BinOp):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Call):
        return f"{node.name}({', '.join(to_text(a) for a in node.args)})"
    raise TypeError(f"not an expression node: {node!r}")
