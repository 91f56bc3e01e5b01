"""Text and JSON serialization of multivectors."""

from __future__ import annotations

import json
import math
from typing import Optional

from ..algebra import Multivector, blade_names
from .parser import ParseError, Sym, blade_indices, parse


def _num_text(x: float) -> str:
    # shortest string that reads back to the same double
    return repr(float(x))


def format_text(m: Multivector) -> str:
    parts: list[str] = []
    for c, name in zip(m.coeffs, blade_names(m.dim)):
        c = float(c)
        if c == 0.0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if name == "1":
            body = _num_text(mag)
        elif mag == 1.0:
            body = name
        else:
            body = f"{_num_text(mag)} {name}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"{'-' if neg else '+'} {body}")
    return " ".join(parts) if parts else "0"


def _json_number(x: float):
    x = float(x)
    if x.is_integer() and not (x == 0.0 and math.copysign(1.0, x) < 0):
        return int(x)
    return x


def format_json(m: Multivector) -> str:
    return json.dumps({"dim": m.dim, "coeffs": [_json_number(c) for c in m.coeffs]},
                      separators=(",", ":"))


def format_mv(m: Multivector, style: str = "text") -> str:
    if style == "text":
        return format_text(m)
    if style == "json":
        return format_json(m)
    raise ValueError(f"unknown style {style!r}")


def _infer_dim(src: str) -> int:
    expr = parse(src)
    dim = 1
    stack = [expr]
    while stack:
        e = stack.pop()
        if isinstance(e, Sym):
            idx = blade_indices(e.name)
            if idx:
                dim = max(dim, max(idx))
            elif e.name == "i":
                dim = max(dim, 2)
            elif e.name == "j":
                dim = max(dim, 3)
        else:
            for attr in ("operand", "left", "right"):
                if hasattr(e, attr):
                    stack.append(getattr(e, attr))
            stack.extend(getattr(e, "args", ()))
    return dim


def parse_mv(src: str, dim: Optional[int] = None) -> Multivector:
    """Read a multivector from JSON ``{"dim":N,"coeffs":[...]}`` or from text.

    For text the dimension defaults to the largest blade index present.
    """
    text = src.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed JSON: {exc.msg}", exc.pos) from None
        if not isinstance(obj, dict) or set(obj) != {"dim", "coeffs"}:
            raise ParseError("JSON multivector needs exactly the keys 'dim' and 'coeffs'", 0)
        d, coeffs = obj["dim"], obj["coeffs"]
        if not isinstance(d, int) or d not in (1, 2, 3, 4):
            raise ParseError("'dim' must be an integer in 1..4", 0)
        if dim is not None and d != dim:
            raise ParseError(f"expected dim {dim}, got {d}", 0)
        if (not isinstance(coeffs, list) or len(coeffs) != 1 << d
                or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in coeffs)):
            raise ParseError(f"'coeffs' must be a list of {1 << d} numbers", 0)
        try:
            return Multivector(d, [float(c) for c in coeffs])
        except (ValueError, OverflowError) as exc:
            raise ParseError(str(exc), 0) from None
    from .evaluator import EvalContext, evaluate

    d = dim if dim is not None else _infer_dim(text)
    return evaluate(parse(text, d), EvalContext(dim=d))
