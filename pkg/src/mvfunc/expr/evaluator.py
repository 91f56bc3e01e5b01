"""Evaluate parsed expressions to multivectors."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .. import algebra as alg
from .. import elementary as el
from .. import trig
from ..algebra import Multivector
from ..config import tolerances
from ..errors import OutOfSubspace
from .parser import BinOp, Call, Expr, Neg, Num, ParseError, Span, Sym, blade_indices, check_symbols, parse

DIM4_ALLOWED = frozenset({"+", "-", "*", "neg", "conj", "rev", "star", "sharp", "abs", "inv"})


class EvalError(ArithmeticError):
    """Evaluation failure tied to the source span that caused it."""

    def __init__(self, message: str, span: Span, cause: Optional[BaseException] = None):
        self.message = message
        self.span = span
        self.cause = cause
        super().__init__(f"{message} at bytes {span[0]}-{span[1]}")


@dataclass
class EvalContext:
    dim: int = 3
    tolerance: Optional[float] = None
    power_side: str = "right"
    variables: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim not in (1, 2, 3, 4):
            raise ValueError(f"dim must be 1-4, got {self.dim}")
        if self.power_side not in ("right", "left"):
            raise ValueError("power_side must be 'right' or 'left'")


def _center_mv(value, dim: int) -> Multivector:
    """Convert a SplitScalar/CenterComplex result to a multivector of ``dim``."""
    if isinstance(value, alg.SplitScalar):
        mv = value.to_multivector(2)
        return alg.project(mv, 1) if dim == 1 else mv
    z = complex(value)
    if dim != 3 and z.imag != 0.0:
        raise OutOfSubspace(f"value {z} has no representation in dim {dim}")
    return alg.from_center(z, dim)


def _unary_table():
    return {
        "exp": el.exp,
        "log": el.log,
        "sqrt": lambda m: el.sqrt_mv(m, "+"),
        "sin": trig.sin_mv,
        "cos": trig.cos_mv,
        "tan": trig.tan_mv,
        "sinh": trig.sinh_mv,
        "cosh": trig.cosh_mv,
        "tanh": trig.tanh_mv,
        "asin": trig.arcsin_mv,
        "acos": trig.arccos_mv,
        "atan": trig.arctan_mv,
        "asinh": trig.arcsinh_mv,
        "acosh": trig.arccosh_mv,
        "atanh": trig.arctanh_mv,
        "inv": alg.inverse,
        "conj": alg.cliff_conj,
        "rev": alg.reversion,
        "star": alg.space_inversion,
        "sharp": alg.sharp,
    }


_UNARY = _unary_table()


class _Evaluator:
    def __init__(self, ctx: EvalContext):
        self.ctx = ctx
        self.dim = ctx.dim

    def allowed(self, op: str, span: Span) -> None:
        if self.dim == 4 and op not in DIM4_ALLOWED:
            raise EvalError(f"'{op}' is not available in dim 4", span)

    def run(self, e: Expr) -> Multivector:
        try:
            return self.visit(e)
        except EvalError:
            raise
        except (ArithmeticError, ValueError) as exc:
            raise EvalError(f"{type(exc).__name__}: {exc}", e.span, exc) from exc

    def guarded(self, e: Expr, fn, *args) -> Multivector:
        try:
            return fn(*args)
        except EvalError:
            raise
        except (ArithmeticError, ValueError) as exc:
            raise EvalError(f"{type(exc).__name__}: {exc}", e.span, exc) from exc

    def visit(self, e: Expr) -> Multivector:
        if isinstance(e, Num):
            return Multivector.scalar(e.value, self.dim)
        if isinstance(e, Sym):
            return self.symbol(e)
        if isinstance(e, Neg):
            self.allowed("neg", e.span)
            return -self.visit(e.operand)
        if isinstance(e, BinOp):
            return self.binop(e)
        if isinstance(e, Call):
            return self.call(e)
        raise TypeError(f"not an expression node: {e!r}")

    def symbol(self, e: Sym) -> Multivector:
        name, dim = e.name, self.dim
        if name in self.ctx.variables:
            value = self.ctx.variables[name]
            if value.dim != dim:
                raise EvalError(f"variable {name} has dim {value.dim}, session dim is {dim}", e.span)
            return value
        if name == "pi":
            return Multivector.scalar(math.pi, dim)
        if name == "i" and dim == 2:
            return Multivector.blade("e12", 2)
        if name == "j" and dim == 3:
            return alg.pseudoscalar(3)
        idx = blade_indices(name)
        if idx is not None and max(idx) <= dim:
            pos, sign = alg.blade_lookup(idx, dim)
            c = np.zeros(1 << dim)
            c[pos] = sign
            return Multivector(dim, c)
        raise EvalError(f"unknown symbol {name!r} in dim {dim}", e.span)

    def binop(self, e: BinOp) -> Multivector:
        op = e.op
        self.allowed(op, e.span)
        if op == "^":
            return self.power(e)
        a = self.visit(e.left)
        b = self.visit(e.right)
        if op == "+":
            return self.guarded(e, alg.add, a, b)
        if op == "-":
            return self.guarded(e, alg.sub, a, b)
        if op == "*":
            return self.guarded(e, alg.gp, a, b)
        if op == "/":
            return self.guarded(e, lambda: alg.gp(a, alg.inverse(b)))
        raise EvalError(f"unknown operator {op!r}", e.span)

    def power(self, e: BinOp) -> Multivector:
        base = self.visit(e.left)
        literal = _integer_literal(e.right)
        if literal is not None:
            return self.guarded(e, el.pow_int, base, literal)
        p = self.visit(e.right)
        return self.guarded(e, el.pow_mv, base, p, self.ctx.power_side)

    def call(self, e: Call) -> Multivector:
        name = e.func
        self.allowed(name, e.span)
        args = [self.visit(a) for a in e.args]
        x = args[0]
        if name in _UNARY:
            return self.guarded(e, _UNARY[name], x)
        if name == "abs":
            if self.dim == 4:
                return self.guarded(e, lambda: _center_mv(alg.amplitude4(x), 4))
            return self.guarded(e, lambda: _center_mv(alg.amplitude(x), self.dim))
        if name == "norm":
            return Multivector.scalar(alg.norm(x), self.dim)
        if name == "arg":
            return self.guarded(e, lambda: _center_mv(el.arg(x), self.dim))
        if name == "grade":
            k = args[1]
            kval = float(k.coeffs[0])
            if np.any(k.coeffs[1:]) or not kval.is_integer():
                raise EvalError("grade index must be an integer scalar", e.args[1].span)
            return self.guarded(e, lambda: alg.grade(x, int(kval)).value)
        raise EvalError(f"unknown function {name!r}", e.span)


def _integer_literal(e: Expr) -> Optional[int]:
    if isinstance(e, Num) and e.integer:
        return int(e.value)
    if isinstance(e, Neg) and isinstance(e.operand, Num) and e.operand.integer:
        return -int(e.operand.value)
    return None


def evaluate(e: Expr, ctx: EvalContext) -> Multivector:
    """Evaluate ``e``; numerical failures become :class:`EvalError` with the offending span."""
    check_symbols(e, ctx.dim, ctx.variables)
    ev = _Evaluator(ctx)
    with np.errstate(all="ignore"):
        if ctx.tolerance is None:
            return ev.run(e)
        with tolerances(null_amplitude=ctx.tolerance):
            return ev.run(e)


def eval_str(src: str, dim: int = 3, **kwargs) -> Multivector:
    """Parse and evaluate in one step."""
    ctx = EvalContext(dim=dim, **kwargs)
    return evaluate(parse(src, dim, ctx.variables), ctx)


__all__ = ["EvalContext", "EvalError", "ParseError", "evaluate", "eval_str", "DIM4_ALLOWED"]
