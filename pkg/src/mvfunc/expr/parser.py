"""Tokenizer and recursive-descent parser for multivector expressions.

Precedence, loosest first::

    + -   (left)
    /     (left)
    * and juxtaposition (left)
    unary - +
    ^     (right; its right operand may carry a sign, so 2^-1 parses)

Numbers use an exponent only when ``e``/``E`` is followed by a sign, so
``2e1`` is ``2 * e1`` while ``2e-1`` is ``0.2``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Optional, Union

MAX_DEPTH = 100

FUNCTIONS: dict[str, int] = {
    "exp": 1, "log": 1, "sqrt": 1,
    "sin": 1, "cos": 1, "tan": 1, "sinh": 1, "cosh": 1, "tanh": 1,
    "asin": 1, "acos": 1, "atan": 1, "asinh": 1, "acosh": 1, "atanh": 1,
    "abs": 1, "norm": 1, "arg": 1, "inv": 1,
    "conj": 1, "rev": 1, "star": 1, "sharp": 1,
    "grade": 2,
}
CONSTANTS = frozenset({"i", "j", "pi"})
BLADE_RE = re.compile(r"e[1-9]+\Z")


class ParseError(ValueError):
    """Syntax error at a UTF-8 byte offset, with the set of acceptable tokens."""

    def __init__(self, message: str, offset: int, expected=frozenset()):
        self.message = message
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


Span = tuple[int, int]


@dataclass(frozen=True)
class Num:
    value: float
    span: Span = field(default=(0, 0), compare=False)
    integer: bool = field(default=False, compare=False)


@dataclass(frozen=True)
class Sym:
    name: str
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple["Expr", ...]
    span: Span = field(default=(0, 0), compare=False)


Expr = Union[Num, Sym, Neg, BinOp, Call]


# ---------------------------------------------------------------------------
# tokens
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str   # NUMBER, IDENT, OP, END
    text: str
    start: int  # byte offsets
    end: int


_NUMBER = re.compile(r"([0-9]+\.?[0-9]*|\.[0-9]+)([eE][+-][0-9]+)?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPS = "+-*/^(),="
_PRIMARY_START = frozenset({"number", "identifier", "'('"})


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    byte = 0
    n = len(src)
    while pos < n:
        ch = src[pos]
        if ch in " \t\r\n":
            pos += 1
            byte += 1
            continue
        m = _NUMBER.match(src, pos)
        if m:
            text = m.group(0)
            tokens.append(Token("NUMBER", text, byte, byte + len(text)))
        elif (m := _IDENT.match(src, pos)):
            text = m.group(0)
            tokens.append(Token("IDENT", text, byte, byte + len(text)))
        elif ch in _OPS:
            text = ch
            tokens.append(Token("OP", ch, byte, byte + 1))
        else:
            raise ParseError(f"unexpected character {ch!r}", byte,
                             _PRIMARY_START | {"operator"})
        pos += len(text)
        byte += len(text)  # every accepted token is ASCII
    tokens.append(Token("END", "", byte, byte))
    return tokens


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, src: str):
        self.tokens = tokenize(src)
        self.i = 0
        self.depth = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def at_op(self, *ops: str) -> bool:
        return self.tok.kind == "OP" and self.tok.text in ops

    def expect_op(self, op: str) -> Token:
        if not self.at_op(op):
            raise self.error(f"expected {op!r}", {repr(op)})
        return self.advance()

    def error(self, message: str, expected) -> ParseError:
        t = self.tok
        found = "end of input" if t.kind == "END" else repr(t.text)
        return ParseError(f"{message}, found {found}", t.start, expected)

    def enter(self):
        self.depth += 1
        if self.depth > MAX_DEPTH:
            raise ParseError("expression nested too deeply", self.tok.start)

    def leave(self):
        self.depth -= 1

    # grammar ------------------------------------------------------------

    def parse(self) -> Expr:
        e = self.additive()
        if self.tok.kind != "END":
            raise self.error("unexpected token", {"operator", "end of input"})
        return e

    def additive(self) -> Expr:
        self.enter()
        left = self.quotient()
        while self.at_op("+", "-"):
            op = self.advance().text
            right = self.quotient()
            left = BinOp(op, left, right, (left.span[0], right.span[1]))
        self.leave()
        return left

    def quotient(self) -> Expr:
        left = self.product()
        while self.at_op("/"):
            self.advance()
            right = self.product()
            left = BinOp("/", left, right, (left.span[0], right.span[1]))
        return left

    def _starts_primary(self) -> bool:
        t = self.tok
        return t.kind in ("NUMBER", "IDENT") or (t.kind == "OP" and t.text == "(")

    def product(self) -> Expr:
        left = self.unary()
        while True:
            if self.at_op("*"):
                self.advance()
                right = self.unary()
            elif self._starts_primary():
                right = self.unary()
            else:
                return left
            left = BinOp("*", left, right, (left.span[0], right.span[1]))

    def unary(self) -> Expr:
        if self.at_op("-", "+"):
            self.enter()
            t = self.advance()
            operand = self.unary()
            self.leave()
            if t.text == "+":
                return operand
            return Neg(operand, (t.start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if not self.at_op("^"):
            return base
        self.advance()
        self.enter()
        exponent = self.signed_power()
        self.leave()
        return BinOp("^", base, exponent, (base.span[0], exponent.span[1]))

    def signed_power(self) -> Expr:
        if self.at_op("-", "+"):
            self.enter()
            t = self.advance()
            operand = self.signed_power()
            self.leave()
            if t.text == "+":
                return operand
            return Neg(operand, (t.start, operand.span[1]))
        return self.power()

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "NUMBER":
            self.advance()
            value = float(t.text)
            if not math.isfinite(value):
                raise ParseError(f"number {t.text!r} is out of range", t.start)
            integral = re.fullmatch(r"[0-9]+", t.text) is not None
            return Num(value, (t.start, t.end), integral)
        if t.kind == "IDENT":
            self.advance()
            if t.text in FUNCTIONS:
                return self.call(t)
            if self.at_op("("):
                raise ParseError(f"unknown function {t.text!r}", t.start, set(FUNCTIONS))
            return Sym(t.text, (t.start, t.end))
        if self.at_op("("):
            self.advance()
            e = self.additive()
            self.expect_op(")")
            return e
        raise self.error("expected an operand", _PRIMARY_START | {"'-'", "'+'"})

    def call(self, name_tok: Token) -> Call:
        self.expect_op("(")
        args = [self.additive()]
        while self.at_op(","):
            self.advance()
            args.append(self.additive())
        if not self.at_op(")"):
            raise self.error("expected ',' or ')'", {"','", "')'"})
        close = self.advance()
        arity = FUNCTIONS[name_tok.text]
        if len(args) != arity:
            raise ParseError(f"{name_tok.text} takes {arity} argument(s), got {len(args)}",
                             name_tok.start)
        return Call(name_tok.text, tuple(args), (name_tok.start, close.end))


def parse(src: str, dim: Optional[int] = None, variables=()) -> Expr:
    """Parse ``src``; with ``dim`` given, also reject symbols invalid in that dimension."""
    if not isinstance(src, str):
        raise ParseError("expression must be text", 0)
    try:
        expr = _Parser(src).parse()
    except RecursionError:
        raise ParseError("expression nested too deeply", 0) from None
    if dim is not None:
        check_symbols(expr, dim, variables)
    return expr


def blade_indices(name: str) -> Optional[list[int]]:
    if BLADE_RE.match(name):
        return [int(ch) for ch in name[1:]]
    return None


def check_symbols(expr: Expr, dim: int, variables=()) -> None:
    """Raise :class:`ParseError` for symbols not meaningful in dimension ``dim``."""
    stack = [expr]
    names = set(variables)
    while stack:
        e = stack.pop()
        if isinstance(e, Sym):
            _check_symbol(e, dim, names)
        elif isinstance(e, Neg):
            stack.append(e.operand)
        elif isinstance(e, BinOp):
            stack.extend((e.left, e.right))
        elif isinstance(e, Call):
            stack.extend(e.args)


def _check_symbol(e: Sym, dim: int, names) -> None:
    name = e.name
    if name in names or name == "pi":
        return
    if name == "i":
        if dim != 2:
            raise ParseError("'i' (= e12) is only available in dim 2", e.span[0])
        return
    if name == "j":
        if dim != 3:
            raise ParseError("'j' (= e123) is only available in dim 3", e.span[0])
        return
    idx = blade_indices(name)
    if idx is not None:
        if max(idx) > dim:
            raise ParseError(f"blade {name} does not exist in dim {dim}", e.span[0])
        return
    raise ParseError(f"unknown symbol {name!r}", e.span[0])
