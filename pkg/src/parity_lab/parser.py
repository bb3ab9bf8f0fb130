"""Recursive-descent parser for polynomial and rational-function expressions.

Grammar (EBNF)::

    expr   = term , { ( "+" | "-" ) , term } ;
    term   = unary , { ( "*" | "/" ) , unary } ;
    unary  = "-" , unary | power ;
    power  = atom , [ "^" , unary ] ;          (* right-associative *)
    atom   = integer | rational | "z" | "w" | "(" , expr , ")" ;
    rational = integer , "/" , integer ;       (* no whitespace, see below *)

``a/b`` written without spaces between two integer literals is lexed as one
rational literal, except directly after ``^`` or ``/`` or directly before
``^``, where it would change the meaning (``z^2/3``, ``x/2/3``, ``2/3^2``).
There is no implicit multiplication: ``2z`` is an error, write ``2*z``.
Exponents must evaluate to non-negative integer constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bivariate import BiPoly
from .poly import UniPoly
from .rational import RationalFunction

MAX_INPUT_BYTES = 64 * 1024
MAX_DEGREE = 1024
MAX_NESTING = 100

OPERAND_START = ("number", "z", "w", "(", "-")
AFTER_OPERAND = ("+", "-", "*", "/", "^", ")", "end of input")

GRAMMAR = __doc__


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected: tuple = ()):
        self.message = message
        self.offset = offset
        self.expected = tuple(expected)
        text = f"{message} at offset {offset}"
        if expected:
            text += f" (expected one of: {', '.join(expected)})"
        super().__init__(text)


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "var", "op", "end"
    text: str
    offset: int
    value: Fraction | None = None


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t\r\n":
            i += 1
            continue
        if not ch.isascii():
            raise ParseError(f"unexpected character {ch!r}", i, OPERAND_START)
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            value = Fraction(int(text[i:j]))
            prev = tokens[-1].text if tokens else ""
            if (
                j + 1 < n
                and text[j] == "/"
                and text[j + 1].isdigit()
                and prev not in ("^", "/")
            ):
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                nxt = text[k:].lstrip()[:1]
                if nxt != "^":
                    den = int(text[j + 1 : k])
                    if den == 0:
                        raise ParseError("division by zero in rational literal", j)
                    tokens.append(Token("num", text[i:k], i, Fraction(int(text[i:j]), den)))
                    i = k
                    continue
            tokens.append(Token("num", text[i:j], i, value))
            i = j
            continue
        if ch in "zw":
            tokens.append(Token("var", ch, i))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append(Token("op", ch, i))
            i += 1
            continue
        if ch.isalpha():
            raise ParseError(f"unknown identifier {ch!r} (variables are z and w)", i, OPERAND_START)
        raise ParseError(f"unexpected character {ch!r}", i, AFTER_OPERAND)
    tokens.append(Token("end", "", n))
    return tokens


# -- syntax tree --------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: Fraction
    offset: int


@dataclass(frozen=True)
class Var:
    name: str
    offset: int


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    offset: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    offset: int


Expr = Union[Num, Var, Neg, BinOp]


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0
        self.depth = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def take(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def at_op(self, *ops) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.text in ops

    def parse(self) -> Expr:
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            self._unexpected(tok, AFTER_OPERAND)
        return node

    def _unexpected(self, tok: Token, expected):
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.offset, expected)
        hint = ""
        if tok.kind in ("var", "num") or tok.text == "(":
            hint = " (no implicit multiplication; use '*')"
        raise ParseError(f"unexpected {tok.text!r}{hint}", tok.offset, expected)

    def expr(self) -> Expr:
        node = self.term()
        while self.at_op("+", "-"):
            tok = self.take()
            node = BinOp(tok.text, node, self.term(), tok.offset)
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self.at_op("*", "/"):
            tok = self.take()
            node = BinOp(tok.text, node, self.unary(), tok.offset)
        return node

    def unary(self) -> Expr:
        negs = []
        while self.at_op("-"):
            negs.append(self.take().offset)
        node = self.power()
        for offset in reversed(negs):
            node = Neg(node, offset)
        return node

    def power(self) -> Expr:
        base = self.atom()
        if self.at_op("^"):
            tok = self.take()
            self._enter(tok)
            exponent = self.unary()
            self.depth -= 1
            return BinOp("^", base, exponent, tok.offset)
        return base

    def _enter(self, tok: Token):
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise ParseError(f"nesting deeper than {MAX_NESTING}", tok.offset)

    def atom(self) -> Expr:
        tok = self.peek()
        if tok.kind == "num":
            self.take()
            return Num(tok.value, tok.offset)
        if tok.kind == "var":
            self.take()
            return Var(tok.text, tok.offset)
        if tok.kind == "op" and tok.text == "(":
            self.take()
            self._enter(tok)
            node = self.expr()
            self.depth -= 1
            if not self.at_op(")"):
                self._unexpected(self.peek(), ("+", "-", "*", "/", "^", ")"))
            self.take()
            return node
        self._unexpected(tok, OPERAND_START)


def parse_tree(text: str) -> Expr:
    if len(text.encode("utf-8")) > MAX_INPUT_BYTES:
        raise ParseError(f"input longer than {MAX_INPUT_BYTES} bytes", MAX_INPUT_BYTES)
    return _Parser(tokenize(text)).parse()


# -- lowering -------------------------------------------------------------------

Value = Union[BiPoly, RationalFunction]


def _degree(v: Value) -> int:
    if isinstance(v, BiPoly):
        return 0 if v.is_zero() else v.total_degree
    return max(0 if v.num.is_zero() else v.num.degree, v.den.degree)


def _as_rf(v: Value, offset: int) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if v.uses_w():
        raise ParseError("w cannot appear in a rational function (division by a non-constant)", offset)
    return RationalFunction(v.to_unipoly())


def _check_degree(d: int, offset: int):
    if d > MAX_DEGREE:
        raise ParseError(f"degree {d} exceeds the limit {MAX_DEGREE}", offset)


def _apply(node: BinOp, left: Value, right: Value) -> Value:
    op, at = node.op, node.offset
    if op == "^":
        if not (isinstance(right, BiPoly) and right.is_constant()):
            raise ParseError("exponent must be a non-negative integer constant", at)
        e = Fraction(right.at_origin())
        if e.denominator != 1 or e < 0:
            raise ParseError(f"exponent {e} is not a non-negative integer", at)
        e = int(e)
        if e > MAX_DEGREE:
            raise ParseError(f"exponent {e} exceeds the limit {MAX_DEGREE}", at)
        _check_degree(_degree(left) * e, at)
        return left**e
    if op in "+-*":
        if op == "*":
            _check_degree(_degree(left) + _degree(right), at)
        if not (isinstance(left, BiPoly) and isinstance(right, BiPoly)):
            left, right = _as_rf(left, at), _as_rf(right, at)
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        return left * right
    if isinstance(right, BiPoly) and right.is_constant():
        c = right.at_origin()
        if c == 0:
            raise ParseError("division by zero", at)
        if isinstance(left, BiPoly):
            return left * BiPoly.constant(1 / Fraction(c))
        return left / c
    _check_degree(_degree(left) + _degree(right), at)
    left, right = _as_rf(left, at), _as_rf(right, at)
    if right.is_zero():
        raise ParseError("division by zero", at)
    return left / right


def lower(root: Expr) -> Value:
    """Evaluate a syntax tree; iterative so long operator chains cannot overflow the stack."""
    values: list[Value] = []
    stack: list[tuple[Expr, bool]] = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Num):
            values.append(BiPoly.constant(node.value))
        elif isinstance(node, Var):
            values.append(BiPoly.z() if node.name == "z" else BiPoly.w())
        elif not expanded:
            stack.append((node, True))
            if isinstance(node, Neg):
                stack.append((node.operand, False))
            else:
                stack.append((node.right, False))
                stack.append((node.left, False))
        elif isinstance(node, Neg):
            values.append(-values.pop())
        else:
            right = values.pop()
            left = values.pop()
            values.append(_apply(node, left, right))
    return values.pop()


def parse_expr(text: str) -> UniPoly | BiPoly | RationalFunction:
    """Parse text to a UniPoly, a BiPoly (if w occurs) or a RationalFunction."""
    value = lower(parse_tree(text))
    if isinstance(value, BiPoly) and not value.uses_w():
        return value.to_unipoly()
    return value


def parse_poly(text: str) -> UniPoly:
    value = parse_expr(text)
    if not isinstance(value, UniPoly):
        kind = "bivariate polynomial" if isinstance(value, BiPoly) else "rational function"
        raise ParseError(f"expected a polynomial in z, got a {kind}", 0)
    return value


def parse_bipoly(text: str) -> BiPoly:
    value = parse_expr(text)
    if isinstance(value, UniPoly):
        return BiPoly.from_unipoly(value)
    if not isinstance(value, BiPoly):
        raise ParseError("expected a polynomial in z and w, got a rational function", 0)
    return value


def parse_rational_function(text: str) -> RationalFunction:
    value = parse_expr(text)
    if isinstance(value, UniPoly):
        return RationalFunction(value)
    if not isinstance(value, RationalFunction):
        raise ParseError("expected a rational function of z, got a bivariate polynomial", 0)
    return value
