"""Recursive-descent parser for polynomial expressions.

Grammar (loosest binding first):

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := '-' factor | power
    power  := atom ('^' INT)?
    atom   := INT ('/' INT)? | VAR | '(' expr ')'

so '^' binds tighter than unary minus, which binds tighter than '*'.
Implicit multiplication is not supported; '/' only forms integer fraction
literals like 3/4; exponents are non-negative integer literals. Variables
are single letters from x y z w t s u v.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput
from .poly import MultiPoly

ALLOWED_VARIABLES = ("s", "t", "u", "v", "w", "x", "y", "z")


class ParseError(InvalidInput):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


# -- AST ------------------------------------------------------------------------


@dataclass(frozen=True)
class Const:
    value: Fraction


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


ExpressionAST = object  # Const | Var | Add | Mul | Neg | Pow


# -- lexer ------------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # INT NAME OP END
    text: str
    pos: int


def _tokenize(text: str) -> list:
    out = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            out.append(_Token("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("END", "", n))
    return out


# -- parser -----------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def advance(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op: str):
        tok = self.peek()
        if tok.kind != "OP" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)
        return self.advance()

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "END":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return node

    def expr(self):
        node = self.term()
        while self.peek().kind == "OP" and self.peek().text in "+-":
            op = self.advance().text
            rhs = self.term()
            node = Add(node, rhs if op == "+" else Neg(rhs))
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == "OP" and self.peek().text == "*":
            self.advance()
            node = Mul(node, self.factor())
        return node

    def factor(self):
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "-":
            self.advance()
            return Neg(self.factor())
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok.kind == "OP" and tok.text == "^":
            self.advance()
            etok = self.peek()
            if etok.kind != "INT":
                raise ParseError(
                    "exponent must be a non-negative integer literal", etok.pos
                )
            self.advance()
            return Pow(base, int(etok.text))
        return base

    def atom(self):
        tok = self.advance()
        if tok.kind == "INT":
            nxt = self.peek()
            if nxt.kind == "OP" and nxt.text == "/":
                slash = self.advance()
                dtok = self.peek()
                if dtok.kind != "INT":
                    raise ParseError("'/' is only allowed between integer literals", slash.pos)
                self.advance()
                den = int(dtok.text)
                if den == 0:
                    raise ParseError("zero denominator", dtok.pos)
                return Const(Fraction(int(tok.text), den))
            return Const(Fraction(int(tok.text)))
        if tok.kind == "NAME":
            if tok.text not in ALLOWED_VARIABLES:
                raise ParseError(f"unknown variable {tok.text!r}", tok.pos)
            return Var(tok.text)
        if tok.kind == "OP" and tok.text == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        raise ParseError(f"unexpected {tok.text or 'end of input'!r}", tok.pos)


def parse_expression(text: str) -> ExpressionAST:
    """Parse to an AST of Const/Var/Add/Mul/Neg/Pow nodes."""
    return _Parser(text).parse()


def ast_to_poly(node: ExpressionAST) -> MultiPoly:
    """Evaluate an AST into a canonical sparse polynomial (total)."""
    if isinstance(node, Const):
        return MultiPoly.constant(node.value)
    if isinstance(node, Var):
        return MultiPoly.variable(node.name)
    if isinstance(node, Add):
        return ast_to_poly(node.left) + ast_to_poly(node.right)
    if isinstance(node, Mul):
        return ast_to_poly(node.left) * ast_to_poly(node.right)
    if isinstance(node, Neg):
        return -ast_to_poly(node.operand)
    if isinstance(node, Pow):
        return ast_to_poly(node.base) ** node.exponent
    raise InvalidInput(f"not an expression node: {node!r}")


def parse_poly(text: str, allowed_vars=None) -> MultiPoly:
    """Parse and evaluate, optionally restricting the variables used."""
    poly = ast_to_poly(parse_expression(text))
    if allowed_vars is not None:
        bad = [v for v in poly.vars if poly.uses(v) and v not in allowed_vars]
        if bad:
            raise InvalidInput(
                f"expression may only use {', '.join(sorted(allowed_vars))}; found {', '.join(bad)}"
            )
    return poly
