"""Acceptance gate.

Each ``criterion_N`` function runs one acceptance criterion at its stated
sample count and tolerance and returns a :class:`CriterionResult`. The pytest
wrappers assert on the result; the conftest hook prints one PASS/FAIL line per
criterion at the end of the session. Running this file directly prints the
same lines::

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import cmath
import io
import json
import math
import time
from dataclasses import dataclass, field

import numpy as np

from mvfunc import (
    BranchIndex,
    Multivector,
    amplitude4,
    arcsin_mv,
    arcsinh_mv,
    arctan_mv,
    cliff_conj,
    cos_mv,
    cosh_mv,
    exp,
    geometric_series,
    gp,
    inverse4,
    log,
    norm,
    pow_mv,
    pow_real,
    reversion,
    sin_mv,
    sinh_mv,
    sqrt_mv,
    sylvester_solve,
    tan_mv,
)
from mvfunc.algebra import _radicand4_mv, amplitude_squared, from_center, mul_j, pseudoscalar
from mvfunc.cli import main as cli_main
from mvfunc.errors import CliffordError
from mvfunc.oracle import mat_fn, principal_consistent, rep, series_eval
from mvfunc.relations import random_mv, relation_names

RESULTS: dict[int, "CriterionResult"] = {}

J = pseudoscalar(3)
ONE3 = Multivector.scalar(1.0, 3)
E_HALF_PI = math.exp(-math.pi / 2)
EVEN3 = np.array([True, False, False, False, True, True, True, False])


def e(name: str, dim: int = 3) -> Multivector:
    return Multivector.blade(name, dim)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} criterion {self.number} ({self.title}): {self.detail} [{self.seconds:.2f}s]"


def _finish(number: int, title: str, ok: bool, detail: str, t0: float,
            failures=(), budget: float | None = None) -> CriterionResult:
    elapsed = time.perf_counter() - t0
    if budget is not None and elapsed >= budget:
        ok = False
        detail += f"; runtime {elapsed:.2f}s exceeds {budget:g}s"
    res = CriterionResult(number, title, ok, detail, elapsed, list(failures))
    RESULTS[number] = res
    return res


def _rel(got: Multivector, want: Multivector) -> float:
    return norm(got - want) / max(1.0, norm(want))


class _Max:
    """Running maximum that remembers its arguments."""

    def __init__(self):
        self.value = 0.0
        self.where = None

    def add(self, x: float, where=None) -> None:
        if not x <= self.value:  # also catches nan
            self.value = x if x == x else math.inf
            self.where = where

    def __format__(self, spec):
        return format(self.value, spec)


# ---------------------------------------------------------------------------
# 1. fixed-point identity table
# ---------------------------------------------------------------------------

_UNIT_VECTORS = [
    e("e1"), e("e2"), e("e3"),
    Multivector.vector([1 / 3, 2 / 3, 2 / 3], 3),
    Multivector.vector([0.6, 0.0, -0.8], 3),
]
_ORTHO_PAIRS = [
    (e("e1"), e("e2")), (e("e2"), e("e1")), (e("e2"), e("e3")), (e("e3"), e("e1")),
    (Multivector.vector([1 / 3, 2 / 3, 2 / 3], 3), Multivector.vector([2 / 3, 1 / 3, -2 / 3], 3)),
]
_VECTORS = [e("e1"), Multivector.vector([0.3, -1.2, 2.0], 3), Multivector.vector([1e-3, 0, 0], 3)]


def _table_rows():
    """(label, residual) for every row of the three-dimensional relation table."""
    rows = []
    scalar = Multivector.scalar(E_HALF_PI, 3)
    rows.append(("j^j = e^(-pi/2)", norm(pow_mv(J, J) - scalar)))
    rows.append(("i^i = e^(-pi/2), i = e12", norm(pow_mv(e("e12"), e("e12")) - scalar)))
    rows.append(("i^i = e^(-pi/2) in dim 2",
                 norm(pow_mv(e("e12", 2), e("e12", 2)) - Multivector.scalar(E_HALF_PI, 2))))
    for v in _UNIT_VECTORS:
        jv = mul_j(v)
        rows.append((f"(jv)^(jv) = e^(-pi/2), v={v.coeffs[1:4].round(3).tolist()}",
                     norm(pow_mv(jv, jv) - scalar)))
    rows.append(("(je1)^(je3) = je2", norm(pow_mv(mul_j(e("e1")), mul_j(e("e3"))) - mul_j(e("e2")))))
    for v, p in _ORTHO_PAIRS:
        w = mul_j(gp(v, p))  # w v_perp v = j
        rows.append((f"(jv)^(jv_perp) = jw, v={v.coeffs[1:4].round(3).tolist()}",
                     norm(pow_mv(mul_j(v), mul_j(p)) - mul_j(w))))
    for v in _UNIT_VECTORS:
        rows.append((f"v^v = v, v={v.coeffs[1:4].round(3).tolist()}", norm(pow_mv(v, v) - v)))
    rows.append(("e1^e2 = 1", norm(pow_mv(e("e1"), e("e2")) - ONE3)))
    rows.append(("e2^e1 = 1", norm(pow_mv(e("e2"), e("e1")) - ONE3)))
    rows.append(("e2^(je3) = 1", norm(pow_mv(e("e2"), mul_j(e("e3"))) - ONE3)))
    half = gp(ONE3 - J, e("e1") + J) * 0.5
    rows.append(("e1^(1/2) = (1-j)(e1+j)/2 via pow", norm(pow_real(e("e1"), 0.5) - half)))
    rows.append(("e1^(1/2) = (1-j)(e1+j)/2 via sqrt", norm(sqrt_mv(e("e1"), "+") - half)))
    for v in _VECTORS:
        s = norm(v)
        want = from_center(1.0 / cmath.sqrt(2j * s), 3) * (v + J * s)
        rows.append((f"v^(1/2) closed form, |v|={s:.3g}", norm(sqrt_mv(v, "+") - want)))
        rows.append((f"cos v = cos|v|, |v|={s:.3g}", norm(cos_mv(v) - math.cos(s))))
        direct = log(v + sqrt_mv(ONE3 + gp(v, v), "+"))
        rows.append((f"arcsinh v = log(v + (1+v^2)^(1/2)), |v|={s:.3g}",
                     max(norm(arcsinh_mv(v) - direct), norm(sinh_mv(arcsinh_mv(v)) - v))))
    for v in _UNIT_VECTORS:
        rows.append((f"(jv)^v = j, v={v.coeffs[1:4].round(3).tolist()}", norm(pow_mv(mul_j(v), v) - J)))
        rows.append((f"j^v = jv, v={v.coeffs[1:4].round(3).tolist()}", norm(pow_mv(J, v) - mul_j(v))))
    return rows


def criterion_1() -> CriterionResult:
    t0 = time.perf_counter()
    rows = _table_rows()
    tol = 1e-10
    bad = [(label, r) for label, r in rows if not r <= tol]
    detail = f"{len(rows) - len(bad)}/{len(rows)} rows within {tol:g}"
    if bad:
        detail += "; over: " + ", ".join(f"{label} ({r:.3g})" for label, r in bad)
        # the same powers on the non-principal log branches where they do hold
        alt = max(norm(pow_mv(e("e1"), e("e2"), branch=BranchIndex(n=-1, m=1)) - ONE3),
                  norm(pow_mv(e("e2"), e("e1"), branch=BranchIndex(n=-1, m=1)) - ONE3),
                  norm(pow_mv(e("e2"), mul_j(e("e3")), branch=BranchIndex(n=1, m=-1)) - ONE3))
        detail += f"; on branches (n,m)=(-1,1) and (1,-1) residual {alt:.1e}"
    return _finish(1, "fixed-point identity table", not bad, detail, t0,
                   [label for label, _ in bad], budget=1.0)


# ---------------------------------------------------------------------------
# 2. oracle equivalence
# ---------------------------------------------------------------------------

def _small_perturbation(rng, dim: int, radius: float) -> Multivector:
    c = rng.normal(size=1 << dim)
    return Multivector(dim, c * (rng.uniform(0, radius) / np.linalg.norm(c)))


def criterion_2(samples: int = 10_000) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(20_002)
    hom, fn_mat, fn_ser = _Max(), _Max(), _Max()
    principal = 0
    problems: list[str] = []
    funcs = (("exp", exp), ("log", log), ("sqrt", lambda m: sqrt_mv(m, "+")))
    with np.errstate(all="ignore"):
        for dim in (2, 3):
            for _ in range(samples):
                a = random_mv(rng, dim)
                b = Multivector(dim, rng.uniform(-2, 2, size=1 << dim))
                hom.add(float(np.max(np.abs(rep(gp(a, b)) - rep(a) @ rep(b)))), (a, b))

                fn_ser.add(_rel(exp(a), series_eval("exp", a, 40)), ("exp", a))
                fn_mat.add(_rel(exp(a), mat_fn("exp", a)), ("exp", a))
                if principal_consistent(a):
                    principal += 1
                    for kind, fn in funcs[1:]:
                        try:
                            fn_mat.add(_rel(fn(a), mat_fn(kind, a)), (kind, a))
                        except CliffordError as exc:
                            problems.append(f"{kind}({a}) raised {exc!r}")

                # log and sqrt series converge around 1; radius 0.3 keeps
                # the 40-term truncation below 1e-14
                x = _small_perturbation(rng, dim, 0.3)
                m = x + 1.0
                fn_ser.add(_rel(log(m), series_eval("log1p", x, 40)), ("log", m))
                fn_ser.add(_rel(sqrt_mv(m, "+"), series_eval("sqrt1p", x, 40)), ("sqrt", m))
    ok = hom.value <= 1e-12 and fn_mat.value <= 1e-8 and fn_ser.value <= 1e-8 and not problems
    detail = (f"homomorphism {hom:.2e} (tol 1e-12); vs matrix functions {fn_mat:.2e}, "
              f"vs 40-term series {fn_ser:.2e} (tol 1e-8 relative); "
              f"{principal}/{2 * samples} samples on the principal domain")
    if problems:
        detail += f"; {len(problems)} evaluation errors"
    return _finish(2, "oracle equivalence", ok, detail, t0, problems[:5], budget=30.0)


# ---------------------------------------------------------------------------
# 3. roundtrips
# ---------------------------------------------------------------------------

def _minus_branch_2d(rng) -> Multivector:
    """Dim-2 sample meeting the '-' root preconditions: a > 0 and a - |M| > 0."""
    while True:
        f = rng.uniform(-2, 2, size=3)
        f2 = f[0] ** 2 + f[1] ** 2 - f[2] ** 2
        if f2 <= 1e-3:
            continue
        a = math.sqrt(f2) * rng.uniform(1.01, 3.0)
        return Multivector(2, [a, *f])


def _unit_ball(rng, dim: int) -> Multivector:
    c = rng.normal(size=1 << dim)
    return Multivector(dim, c * (rng.uniform(0, 1) / np.linalg.norm(c)))


def criterion_3(samples: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(30_003)
    explog, roots, trig = _Max(), _Max(), _Max()
    counts = {"exp_log": 0, "sqrt": 0, "sqrt_minus_2d": 0, "trig": 0}
    with np.errstate(all="ignore"):
        for dim in (2, 3):
            done = 0
            while done < samples:
                m = random_mv(rng, dim)
                try:
                    lm = log(m)
                except CliffordError:
                    continue  # 2D inputs outside the real-log domain
                explog.add(norm(exp(lm) - m) / norm(m), m)
                done += 1
            counts["exp_log"] += done

            done = 0
            while done < samples:
                m = random_mv(rng, dim)
                for sign in "+-":
                    try:
                        r = sqrt_mv(m, sign)
                    except CliffordError:
                        continue
                    roots.add(norm(gp(r, r) - m) / norm(m), (sign, m))
                    done += 1
            counts["sqrt"] += done

        for _ in range(samples):
            m = _minus_branch_2d(rng)
            for sign in "+-":
                r = sqrt_mv(m, sign)
                roots.add(norm(gp(r, r) - m) / norm(m), (sign, m))
            counts["sqrt_minus_2d"] += 1

        pairs = [(sinh_mv, arcsinh_mv, (2, 3), "sinh"),
                 (sin_mv, arcsin_mv, (3,), "sin"),
                 (tan_mv, arctan_mv, (3,), "tan")]
        for f, g, dims, name in pairs:
            for dim in dims:
                for _ in range(samples):
                    m = _unit_ball(rng, dim)
                    trig.add(norm(f(g(m)) - m), (name, m))
                    trig.add(norm(g(f(m)) - m), (name + " inverse", m))
                    counts["trig"] += 1
    ok = explog.value <= 1e-9 and roots.value <= 1e-9 and trig.value <= 1e-8
    detail = (f"exp(log M) {explog:.2e} over {counts['exp_log']}; sqrt^2 {roots:.2e} over "
              f"{counts['sqrt']} roots + {counts['sqrt_minus_2d']} 2D '-' precondition cases "
              f"(tol 1e-9 relative); sinh/sin/tan inverse pairs {trig:.2e} over {counts['trig']} "
              f"(tol 1e-8)")
    return _finish(3, "roundtrips", ok, detail, t0)


# ---------------------------------------------------------------------------
# 4. algebraic laws
# ---------------------------------------------------------------------------

def product_2d(p, q):
    """Dim-2 geometric product written out by hand, coefficient order [1, e1, e2, e12]."""
    a, b, c, d = p
    w, x, y, z = q
    return (a * w + b * x + c * y - d * z,
            a * x + b * w - c * z + d * y,
            a * y + b * z + c * w - d * x,
            a * z + b * y - c * x + d * w)


def _four_square(p, q) -> float:
    """Residual of the four-square identity for the signature (+, -, -, +)."""
    def form(t):
        return t[0] ** 2 - t[1] ** 2 - t[2] ** 2 + t[3] ** 2
    r = product_2d(p, q)
    return abs(form(p) * form(q) - form(r)) / max(1.0, abs(form(p) * form(q)))


def criterion_4(samples: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(40_004)
    laws: dict[str, _Max] = {}

    def add(name, value, where=None):
        laws.setdefault(name, _Max()).add(value, where)

    with np.errstate(all="ignore"):
        for dim in (1, 2, 3):
            for _ in range(samples):
                a, b, c = (Multivector(dim, rng.uniform(-2, 2, size=1 << dim)) for _ in range(3))
                add("associativity", _rel(gp(gp(a, b), c), gp(a, gp(b, c))))
                add("reversion anti-automorphism", _rel(reversion(gp(a, b)), gp(reversion(b), reversion(a))))
                add("conjugation anti-automorphism", _rel(cliff_conj(gp(a, b)), gp(cliff_conj(b), cliff_conj(a))))
                lhs = amplitude_squared(gp(a, b))
                rhs = amplitude_squared(a) * amplitude_squared(b)
                add("amplitude multiplicative", abs(lhs - rhs) / max(1.0, abs(rhs)))

                m = random_mv(rng, dim, scale=1.0)
                ch, sh = cosh_mv(m), sinh_mv(m)
                co, si = cos_mv(m), sin_mv(m)
                one = Multivector.scalar(1.0, dim)
                # the squares cancel, so scale by their size
                add("cosh^2 - sinh^2 = 1", norm(gp(ch, ch) - gp(sh, sh) - one) / max(1.0, norm(ch) ** 2))
                add("cos^2 + sin^2 = 1", norm(gp(co, co) + gp(si, si) - one) / max(1.0, norm(co) ** 2))
                add("exp = cosh + sinh", _rel(exp(m), ch + sh))
                add("sinh 2M = 2 sinh M cosh M", _rel(sinh_mv(m * 2.0), gp(sh, ch) * 2.0))
                if dim == 3:
                    add("exp(jM) = cos M + j sin M", _rel(exp(mul_j(m)), co + mul_j(si)))
        for _ in range(samples):
            p, q = rng.uniform(-2, 2, size=4), rng.uniform(-2, 2, size=4)
            hand = Multivector(2, product_2d(p, q))
            add("four-square expansion", max(_four_square(p, q),
                                             _rel(hand, gp(Multivector(2, p), Multivector(2, q)))))
    bad = [k for k, v in laws.items() if not v.value <= 1e-9]
    worst = max(laws, key=lambda k: laws[k].value)
    detail = f"{len(laws) - len(bad)}/{len(laws)} laws within 1e-9 relative; worst {worst} {laws[worst]:.2e}"
    if bad:
        detail += "; over: " + ", ".join(f"{k} ({laws[k]:.2e})" for k in bad)
    return _finish(4, "algebraic laws", not bad, detail, t0, bad)


# ---------------------------------------------------------------------------
# 5. Sylvester equation
# ---------------------------------------------------------------------------

def criterion_5(samples: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(50_005)
    worst = _Max()
    errors: list[str] = []
    with np.errstate(all="ignore"):
        for dim in (2, 3):
            for _ in range(samples):
                a, b, m = (Multivector(dim, rng.uniform(-2, 2, size=1 << dim)) for _ in range(3))
                y = gp(a, m) + gp(m, b)
                try:
                    sol = sylvester_solve(a, b, y)
                except CliffordError as exc:
                    errors.append(f"{a}, {b}: {exc!r}")
                    continue
                worst.add(norm(gp(a, sol) + gp(sol, b) - y) / norm(y), (a, b, y))
    scalar = max(abs(float(sylvester_solve(Multivector.scalar(2, d), Multivector.scalar(3, d),
                                           Multivector.scalar(10, d)).coeffs[0]) - 2.0)
                 for d in (1, 2, 3))
    ok = worst.value <= 1e-9 and scalar <= 1e-14 and not errors
    detail = (f"max residual/|Y| {worst:.2e} over {2 * samples - len(errors)} instances (tol 1e-9); "
              f"(2,3,10) -> 2 off by {scalar:.1e} (tol 1e-14)")
    if errors:
        detail += f"; {len(errors)} solver errors"
    return _finish(5, "Sylvester", ok, detail, t0, errors[:5])


# ---------------------------------------------------------------------------
# 6. unit complex raised to a vector
# ---------------------------------------------------------------------------

def criterion_6(samples: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(60_006)
    value, odd, amp = _Max(), _Max(), _Max()
    for _ in range(samples):
        theta = rng.uniform(-math.pi, math.pi)
        v = Multivector.vector(rng.uniform(-2, 2, size=3), 3)
        s = norm(v)
        got = pow_mv(from_center(cmath.exp(1j * theta), 3), v)
        want = Multivector.scalar(math.cos(s * theta), 3) + mul_j(v * (1.0 / s)) * math.sin(s * theta)
        value.add(norm(got - want), (theta, v))
        odd.add(float(np.max(np.abs(got.coeffs[~EVEN3]))), (theta, v))
        amp.add(abs(amplitude_squared(got) - 1.0), (theta, v))
    ok = value.value <= 1e-9 and odd.value <= 1e-12 and amp.value <= 1e-10
    detail = (f"value {value:.2e} (tol 1e-9), odd part {odd:.2e} (tol 1e-12), "
              f"amplitude {amp:.2e} (tol 1e-10) over {samples} (theta, v)")
    return _finish(6, "unit complex to a vector power", ok, detail, t0)


# ---------------------------------------------------------------------------
# 7. finite geometric series
# ---------------------------------------------------------------------------

def criterion_7(samples: int = 500) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(70_007)
    worst = _Max()
    errors = []
    for dim in (1, 2, 3):
        for _ in range(samples):
            m = _small_perturbation(rng, dim, 0.8)
            n = int(rng.integers(0, 13))
            direct = Multivector.scalar(1.0, dim)
            power = direct
            for _ in range(n):
                power = gp(power, m)
                direct = direct + power
            try:
                closed = geometric_series(m, n)
            except CliffordError as exc:
                errors.append(f"{m}: {exc!r}")
                continue
            worst.add(norm(closed - direct), (m, n))
    ok = worst.value <= 1e-10 and not errors
    detail = f"closed form vs direct sum {worst:.2e} over {3 * samples - len(errors)} (M, n), n <= 12 (tol 1e-10)"
    if errors:
        detail += f"; {len(errors)} with 1 - M not invertible"
    return _finish(7, "geometric series", ok, detail, t0, errors[:5])


# ---------------------------------------------------------------------------
# 8. four dimensions
# ---------------------------------------------------------------------------

def criterion_8(samples: int = 1000) -> CriterionResult:
    t0 = time.perf_counter()
    rng = np.random.default_rng(80_008)
    inv, rad = _Max(), _Max()
    one = Multivector.scalar(1.0, 4)
    done = 0
    while done < samples:
        m = Multivector(4, rng.uniform(-2, 2, size=16))
        if abs(amplitude4(m)) < 1e-6:
            continue
        inv.add(norm(gp(m, inverse4(m)) - one), m)
        rad.add(float(np.max(np.abs(_radicand4_mv(m).coeffs[1:]))), m)
        done += 1
    ok = inv.value <= 1e-9 and rad.value <= 1e-10
    detail = (f"M inverse4(M) - 1 {inv:.2e} (tol 1e-9); radicand non-scalar part {rad:.2e} "
              f"(tol 1e-10) over {samples}")
    return _finish(8, "dim-4 inverse", ok, detail, t0)


# ---------------------------------------------------------------------------
# 9. command line
# ---------------------------------------------------------------------------

def run_cli(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = cli_main(list(argv), stdin=io.StringIO(""), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def _cli_examples() -> list[str]:
    failures = []

    def check(label, ok):
        if not ok:
            failures.append(label)

    code, out, _ = run_cli("eval", "j^j", "--dim", "3")
    check("eval j^j", code == 0 and out.startswith("0.20787957635"))
    code, _, _ = run_cli("eval", "oops(")
    check("eval oops(", code == 2)
    code, out, _ = run_cli("check-relations", "--filter", "rosetta*")
    check("check-relations rosetta*", code == 0 and "FAIL" not in out)
    code, out, _ = run_cli("eval", "e1^e1", "--dim", "3", "--json")
    got = Multivector(3, json.loads(out)["coeffs"]) if code == 0 else None
    check("eval e1^e1", got is not None and norm(got - e("e1")) <= 1e-10)
    code, _, err = run_cli("eval", "(1+e1)/(1-e1)", "--dim", "2")
    check("eval (1+e1)/(1-e1)", code == 1 and "NullAmplitude" in err)
    code, out, _ = run_cli("eval", "sqrt(3+4*i)", "--dim", "2")
    check("eval sqrt(3+4*i)", code == 0 and out.strip() == "2.0 + e12")
    code, out, _ = run_cli("eval", "e12", "--dim", "2", "--json")
    check("json e12", code == 0 and out.strip() == '{"dim":2,"coeffs":[0,0,0,1]}')
    code, out, _ = run_cli("eval", "0", "--dim", "3")
    check("text zero", code == 0 and out.strip() == "0")
    code, _, err = run_cli("eval", "1+*2")
    check("eval 1+*2", code == 2 and "byte 2" in err)
    code, out, _ = run_cli("solve-sylvester", "--a", "2", "--b", "3", "--y", "10", "--dim", "1")
    check("solve-sylvester 2,3,10", code == 0 and "M = 2.0" in out)
    return failures


_FUZZ_ATOMS = ["e1", "e2", "e3", "e4", "e12", "e31", "e123", "e1234", "i", "j", "pi", "x", "0", "1",
               "2.5", "1e-3", "1e+400", "0.0", "9" * 40, ".5", "+", "-", "*", "/", "^", "(", ")",
               ",", "=", " ", "exp(", "log(", "sqrt(", "asin(", "acosh(", "atanh(", "tan(", "abs(",
               "norm(", "arg(", "grade(", "inv(", "conj(", "rev(", "star(", "sharp(", "let", "é", "\x00"]


def _fuzz_input(rng) -> str:
    kind = rng.integers(0, 3)
    if kind == 0:
        raw = rng.integers(0, 256, size=int(rng.integers(0, 24)), dtype=np.uint8).tobytes()
        return raw.decode("utf-8", errors="replace")
    if kind == 1:
        return "".join(rng.choice(list("e123ij+-*/^()., 0987pxs"), size=int(rng.integers(0, 20))))
    return "".join(rng.choice(_FUZZ_ATOMS, size=int(rng.integers(1, 12))))


def criterion_9(fuzz: int = 100_000) -> CriterionResult:
    t0 = time.perf_counter()
    failures = _cli_examples()
    rng = np.random.default_rng(90_009)
    crashes: list[str] = []
    for _ in range(fuzz):
        src = _fuzz_input(rng)
        dim = str(int(rng.integers(1, 5)))
        try:
            code, _, _ = run_cli("eval", src, "--dim", dim)
        except BaseException as exc:  # anything escaping main is a crash
            crashes.append(f"{src!r} dim {dim}: {exc!r}")
            continue
        if code not in (0, 1, 2):
            crashes.append(f"{src!r} dim {dim}: exit {code}")
    code, out, _ = run_cli("check-relations")
    registry_ok = code == 0 and f"{len(relation_names())}/{len(relation_names())} relations passed" in out
    if not registry_ok:
        failures.append("check-relations (full registry)")
    ok = not failures and not crashes
    detail = (f"{10 - sum(f != 'check-relations (full registry)' for f in failures)}/10 CLI examples; "
              f"{fuzz} fuzz inputs, {len(crashes)} crashes; full registry exit {code}")
    return _finish(9, "command line", ok, detail, t0, failures + crashes[:5])


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9]


def _check(res: CriterionResult) -> None:
    print(res.line())
    assert res.passed, res.line() + "".join(f"\n  {f}" for f in res.failures)


def test_criterion_1_fixed_point_table():
    _check(criterion_1())


def test_criterion_2_oracle_equivalence():
    _check(criterion_2())


def test_criterion_3_roundtrips():
    _check(criterion_3())


def test_criterion_4_algebraic_laws():
    _check(criterion_4())


def test_criterion_5_sylvester():
    _check(criterion_5())


def test_criterion_6_unit_complex_power():
    _check(criterion_6())


def test_criterion_7_geometric_series():
    _check(criterion_7())


def test_criterion_8_dim4_inverse():
    _check(criterion_8())


def test_criterion_9_command_line():
    _check(criterion_9())


if __name__ == "__main__":
    for crit in CRITERIA:
        print(crit().line(), flush=True)
