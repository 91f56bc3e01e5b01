"""Expression language: parsing, evaluation and serialization."""

from .evaluator import DIM4_ALLOWED, EvalContext, EvalError, eval_str, evaluate
from .format import format_json, format_mv, format_text, parse_mv
from .parser import FUNCTIONS, BinOp, Call, Expr, Neg, Num, ParseError, Sym, parse, tokenize

__all__ = [
    "DIM4_ALLOWED", "EvalContext", "EvalError", "eval_str", "evaluate",
    "format_json", "format_mv", "format_text", "parse_mv",
    "FUNCTIONS", "BinOp", "Call", "Expr", "Neg", "Num", "ParseError", "Sym", "parse", "tokenize",
]
