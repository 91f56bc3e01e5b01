"""Registry of named identities, checked numerically.

Each relation draws its own inputs from a generator seeded by
``(seed, crc32(name))`` so reports are reproducible and independent of the
order (or thread) in which relations run. A relation either evaluates a fixed
identity once or samples random inputs; a sample whose inputs fall outside the
identity's domain (listed per relation) is redrawn.
"""

from __future__ import annotations

import cmath
import fnmatch
import math
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .algebra import (
    Multivector,
    amplitude_squared,
    from_center,
    gp,
    inverse,
    inverse4,
    lift,
    mul_j,
    norm,
    power_int,
    pseudoscalar,
    split_center,
)
from .elementary import (
    BranchIndex,
    exp,
    log,
    log_branches,
    log_two_vectors,
    polar,
    pow_center,
    pow_mv,
    pow_real,
    root_minus_one_3d,
    sqrt_mv,
)
from .errors import (
    DimensionError,
    NonRealAmplitude2D,
    NonUnitVector,
    NoPrincipalBranch,
    NotInSubalgebra,
    NullAmplitude,
    OutOfSubspace,
    ZeroDenominator,
    ZeroF,
)
from .trig import (
    arccos_mv,
    arccosh_mv,
    arcsin_mv,
    arcsinh_mv,
    arctan_mv,
    arctanh_mv,
    cos_mv,
    cosh_mv,
    sin_mv,
    sinh_mv,
    sinh_zeros,
    tan_mv,
    tan_quotient,
    tanh_mv,
)

_J = pseudoscalar(3)
_DOMAIN_2D = (NonRealAmplitude2D, NoPrincipalBranch, ZeroF, ZeroDenominator)


# ---------------------------------------------------------------------------
# structured views of Cl(R^3)
# ---------------------------------------------------------------------------

_EVEN3 = np.array([True, False, False, False, True, True, True, False])


def rosetta_stone(zhat, v: Multivector) -> Multivector:
    """``zhat ** v`` for a unit centre value ``zhat = cos(theta) + j sin(theta)``.

    The result is the quaternion ``cos(s theta) + j v_hat sin(s theta)``, ``s = |v|``.
    """
    z = complex(zhat)
    if abs(abs(z) - 1.0) > 1e-9:
        raise NonUnitVector(f"|zhat| = {abs(z):.6g}, expected 1")
    if v.dim != 3:
        raise DimensionError("rosetta_stone works in Cl(R^3)")
    return pow_mv(from_center(z, 3), v)


def rosetta_closed_form(theta: float, v: Multivector) -> Multivector:
    s = norm(v)
    if s == 0:
        return Multivector.scalar(1.0, 3)
    return Multivector.scalar(math.cos(s * theta), 3) + mul_j(v) * (math.sin(s * theta) / s)


def _check_even(q: Multivector) -> None:
    if q.dim != 3:
        raise DimensionError("quaternions live in Cl(R^3)")
    if np.any(q.coeffs[~_EVEN3]):
        raise OutOfSubspace("expected an even multivector (scalar + bivector)")


def quat_as_pairs(q: Multivector) -> tuple[complex, complex]:
    """``q = z1 + z2 e31`` with ``z = x + y e12`` returned as ``x + 1j*y``."""
    _check_even(q)
    c = q.coeffs
    # blade order: 1, e1, e2, e3, e12, e31, e23, e123
    return complex(c[0], c[4]), complex(c[5], c[6])


def pairs_to_quat(z1: complex, z2: complex) -> Multivector:
    return Multivector(3, [z1.real, 0, 0, 0, z1.imag, z2.real, z2.imag, 0])


def quat_pair_product(p: Multivector, q: Multivector) -> Multivector:
    """``(x1 y1 - x2 conj(y2)) + (x1 y2 + x2 conj(y1)) e31`` with complex arithmetic only."""
    x1, x2 = quat_as_pairs(p)
    y1, y2 = quat_as_pairs(q)
    return pairs_to_quat(x1 * y1 - x2 * y2.conjugate(), x1 * y2 + x2 * y1.conjugate())


def mv_as_quat_pair(m: Multivector) -> tuple[Multivector, Multivector]:
    """``M = q1 + j q2`` with ``q1 = a + j w`` and ``q2 = t - j v``."""
    if m.dim != 3:
        raise DimensionError("mv_as_quat_pair needs dim 3")
    c = m.coeffs
    q1 = Multivector(3, [c[0], 0, 0, 0, c[4], c[5], c[6], 0])
    v = Multivector(3, [0, c[1], c[2], c[3], 0, 0, 0, 0])
    q2 = Multivector.scalar(c[7], 3) - mul_j(v)
    return q1, q2


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass
class RelationReport:
    name: str
    samples: int
    max_residual: float
    status: str
    witnesses: list = field(default_factory=list)
    tolerance: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "status": self.status,
            "witnesses": list(self.witnesses),
            "note": self.note,
        }


# one evaluation: returns (residual, witness text)
SampleFn = Callable[[np.random.Generator], tuple[float, str]]


@dataclass(frozen=True)
class Relation:
    name: str
    sample: SampleFn
    tol: float
    fixed: bool = False
    default_samples: int = 100
    domain: tuple = ()
    note: str = ""


REGISTRY: dict[str, Relation] = {}


def relation(name: str, tol: float, *, fixed: bool = False, samples: int = 100,
             domain: tuple = (), note: str = ""):
    def deco(fn: SampleFn) -> SampleFn:
        if name in REGISTRY:
            raise ValueError(f"duplicate relation {name!r}")
        REGISTRY[name] = Relation(name, fn, tol, fixed, samples, domain, note)
        return fn
    return deco


def relation_names() -> list[str]:
    return sorted(REGISTRY)


def _rng_for(name: str, seed: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), zlib.crc32(name.encode())])


def run_relation(name: str, samples: Optional[int] = None, seed: int = 0) -> RelationReport:
    if name not in REGISTRY:
        raise KeyError(f"unknown relation {name!r}")
    rel = REGISTRY[name]
    n = 1 if rel.fixed else int(samples if samples is not None else rel.default_samples)
    rng = _rng_for(name, seed)
    worst = 0.0
    bad: list[tuple[float, str]] = []
    done = 0
    for _ in range(n):
        for _attempt in range(200):
            try:
                res, witness = rel.sample(rng)
                break
            except rel.domain:
                continue
            except Exception as exc:  # a failing evaluation is a failing sample
                res, witness = math.inf, f"{type(exc).__name__}: {exc}"
                break
        else:
            res, witness = math.inf, "no admissible sample in 200 draws"
        done += 1
        if not math.isfinite(res) or res > rel.tol:
            bad.append((res, witness))
        if not (res <= worst):
            worst = res if not math.isnan(res) else math.inf
    bad.sort(key=lambda rw: -rw[0] if math.isfinite(rw[0]) else -math.inf)
    status = "pass" if worst <= rel.tol else "fail"
    return RelationReport(name, done, worst, status, [w for _, w in bad[:5]], rel.tol, rel.note)


def run_relations(pattern: str = "*", samples: Optional[int] = None, seed: int = 0,
                  workers: int = 1) -> list[RelationReport]:
    """Run every relation whose name matches the glob; reports sorted by name."""
    names = [n for n in relation_names() if fnmatch.fnmatchcase(n, pattern)]
    if workers <= 1:
        reports = [run_relation(n, samples, seed) for n in names]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda n: run_relation(n, samples, seed), names))
    return sorted(reports, key=lambda r: r.name)


# ---------------------------------------------------------------------------
# sampling helpers
# ---------------------------------------------------------------------------

def random_mv(rng: np.random.Generator, dim: int, scale: float = 2.0,
              min_amp: float = 1e-3, min_f: float = 1e-3) -> Multivector:
    """Uniform coefficients in ``[-scale, scale]`` with amplitude and |F| moduli above thresholds."""
    while True:
        m = Multivector(dim, rng.uniform(-scale, scale, size=1 << dim))
        if dim == 4:
            return m
        if abs(amplitude_squared(m)) ** 0.5 < min_amp:
            continue
        _, f = split_center(m)
        if abs(amplitude_squared(f)) ** 0.5 < min_f:
            continue
        return m


def random_unit_vector(rng: np.random.Generator, dim: int = 3) -> Multivector:
    while True:
        x = rng.normal(size=dim)
        n = float(np.linalg.norm(x))
        if n > 1e-3:
            return Multivector.vector(x / n, dim)


def random_orthonormal_pair(rng: np.random.Generator) -> tuple[Multivector, Multivector]:
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    return Multivector.vector(q[:, 0], 3), Multivector.vector(q[:, 1], 3)


def _res(got: Multivector, want: Multivector) -> float:
    return norm(got - want) / max(1.0, norm(want))


def _w(**items) -> str:
    return ", ".join(f"{k}={_short(v)}" for k, v in items.items())


def _short(v) -> str:
    if isinstance(v, Multivector):
        return "[" + " ".join(f"{c:.6g}" for c in v.coeffs) + "]"
    return repr(v)


_E_HALF_PI = math.exp(-math.pi / 2)
_SCALAR_EHP = Multivector.scalar(_E_HALF_PI, 3)


# ---------------------------------------------------------------------------
# fixed points of the vector / pseudoscalar power table
# ---------------------------------------------------------------------------

@relation("j_pow_j", 1e-12, fixed=True)
def _j_pow_j(rng):
    return _res(pow_mv(_J, _J), _SCALAR_EHP), "j^j"


@relation("i_pow_i", 1e-12, fixed=True)
def _i_pow_i(rng):
    e12 = Multivector.blade("e12", 2)
    return _res(pow_mv(e12, e12), Multivector.scalar(_E_HALF_PI, 2)), "e12^e12 in dim 2"


@relation("e1_pow_e1", 1e-10, fixed=True)
def _e1_pow_e1(rng):
    e1 = Multivector.blade("e1", 3)
    return _res(pow_mv(e1, e1), e1), "e1^e1"


@relation("e1_sqrt", 1e-10, fixed=True)
def _e1_sqrt(rng):
    e1 = Multivector.blade("e1", 3)
    want = gp(1.0 - _J, e1 + _J) * 0.5
    return max(_res(pow_real(e1, 0.5), want), _res(sqrt_mv(e1, "+"), want)), "e1^(1/2)"


@relation("jvhat_pow_jvhat", 1e-10)
def _jv_jv(rng):
    v = random_unit_vector(rng)
    jv = mul_j(v)
    return _res(pow_mv(jv, jv), _SCALAR_EHP), _w(v=v)


@relation("jvhat_pow_jvperp", 1e-10,
          note="w_hat = j v_hat v_perp, so that w_hat v_perp v_hat = j")
def _jv_jvperp(rng):
    v, p = random_orthonormal_pair(rng)
    w = mul_j(gp(v, p))
    return _res(pow_mv(mul_j(v), mul_j(p)), mul_j(w)), _w(v=v, vperp=p)


@relation("vhat_pow_vhat", 1e-10)
def _v_v(rng):
    v = random_unit_vector(rng)
    return _res(pow_mv(v, v), v), _w(v=v)


_ONE3 = Multivector.scalar(1.0, 3)
_VPERP_BRANCH = BranchIndex(n=-1, m=1)
_JVPERP_BRANCH = BranchIndex(n=1, m=-1)


@relation("vhat_pow_vperp", 1e-10,
          note="holds on the log branch n=-1, m=1; the principal value is 1 + F with F nilpotent")
def _v_vperp(rng):
    v, p = random_orthonormal_pair(rng)
    return _res(pow_mv(v, p, branch=_VPERP_BRANCH), _ONE3), _w(v=v, vperp=p)


@relation("vhat_pow_jvperp", 1e-10,
          note="holds on the log branch n=1, m=-1; the principal value is 1 + F with F nilpotent")
def _v_jvperp(rng):
    v, p = random_orthonormal_pair(rng)
    return _res(pow_mv(v, mul_j(p), branch=_JVPERP_BRANCH), _ONE3), _w(v=v, vperp=p)


@relation("jvhat_pow_vhat", 1e-10)
def _jv_v(rng):
    v = random_unit_vector(rng)
    return _res(pow_mv(mul_j(v), v), _J), _w(v=v)


@relation("j_pow_vhat", 1e-10)
def _j_v(rng):
    v = random_unit_vector(rng)
    return _res(pow_mv(_J, v), mul_j(v)), _w(v=v)


@relation("vector_sqrt", 1e-10)
def _vector_sqrt(rng):
    v = Multivector.vector(rng.uniform(-2, 2, size=3), 3)
    s = norm(v)
    den = cmath.sqrt(2j * s)
    want = from_center(1.0 / den, 3) * (v + _J * s)
    got = sqrt_mv(v, "+")
    return max(_res(got, want), _res(gp(got, got), v)), _w(v=v)


@relation("cos_vector", 1e-10)
def _cos_vector(rng):
    v = Multivector.vector(rng.uniform(-2, 2, size=3), 3)
    s = norm(v)
    r1 = _res(cos_mv(v), Multivector.scalar(math.cos(s), 3))
    r2 = _res(sin_mv(v), v * (math.sin(s) / s))
    return max(r1, r2), _w(v=v)


@relation("arcsinh_vector", 1e-10)
def _arcsinh_vector(rng):
    v = Multivector.vector(rng.uniform(-2, 2, size=3), 3)
    s = norm(v)
    # v + sqrt(1 + v^2) is a real-amplitude hyperbolic rotor: log = v_hat asinh|v|
    want = v * (math.asinh(s) / s)
    got = arcsinh_mv(v)
    return max(_res(got, want), _res(sinh_mv(got), v)), _w(v=v)


@relation("rosetta_stone", 1e-9)
def _rosetta(rng):
    theta = rng.uniform(-math.pi, math.pi)
    v = Multivector.vector(rng.uniform(-2, 2, size=3), 3)
    got = rosetta_stone(cmath.exp(1j * theta), v)
    odd = float(np.max(np.abs(got.coeffs[~_EVEN3])))
    amp = abs(amplitude_squared(got) - 1.0)
    return max(_res(got, rosetta_closed_form(theta, v)), odd, amp), _w(theta=theta, v=v)


# ---------------------------------------------------------------------------
# algebraic structure
# ---------------------------------------------------------------------------

@relation("amplitude_multiplicative", 1e-9)
def _amp_mult(rng):
    dim = int(rng.integers(2, 4))
    a, b = random_mv(rng, dim), random_mv(rng, dim)
    lhs = amplitude_squared(gp(a, b))
    rhs = amplitude_squared(a) * amplitude_squared(b)
    return abs(lhs - rhs) / max(1.0, abs(rhs)), _w(a=a, b=b)


@relation("four_square", 1e-9)
def _four_square(rng):
    p = Multivector(3, rng.uniform(-2, 2, size=8) * _EVEN3)
    q = Multivector(3, rng.uniform(-2, 2, size=8) * _EVEN3)
    x, y = p.coeffs[_EVEN3], q.coeffs[_EVEN3]
    prod = gp(p, q).coeffs[_EVEN3]
    lhs = float(np.sum(x * x) * np.sum(y * y))
    return abs(lhs - float(np.sum(prod * prod))) / max(1.0, lhs), _w(p=p, q=q)


@relation("cayley_dickson", 1e-12)
def _cayley_dickson(rng):
    p = Multivector(3, rng.uniform(-2, 2, size=8) * _EVEN3)
    q = Multivector(3, rng.uniform(-2, 2, size=8) * _EVEN3)
    z1, z2 = quat_as_pairs(q)
    nq = abs(abs(z1) ** 2 + abs(z2) ** 2 - norm(q) ** 2)
    return max(_res(quat_pair_product(p, q), gp(p, q)), nq), _w(p=p, q=q)


@relation("complexified_quaternion", 1e-12)
def _complexified(rng):
    m, k = random_mv(rng, 3), random_mv(rng, 3)
    q1, q2 = mv_as_quat_pair(m)
    p1, p2 = mv_as_quat_pair(k)
    back = _res(q1 + mul_j(q2), m)
    prod = (gp(q1, p1) - gp(q2, p2)) + mul_j(gp(q1, p2) + gp(q2, p1))
    return max(back, _res(prod, gp(m, k))), _w(m=m, k=k)


@relation("inverse", 1e-9)
def _inverse(rng):
    dim = int(rng.integers(1, 4))
    m = random_mv(rng, dim)
    return _res(gp(m, inverse(m)), Multivector.scalar(1.0, dim)), _w(m=m)


@relation("inverse_4d", 1e-9, domain=(NullAmplitude,))
def _inverse_4d(rng):
    m = Multivector(4, rng.uniform(-2, 2, size=16))
    return _res(gp(m, inverse4(m)), Multivector.scalar(1.0, 4)), _w(m=m)


# ---------------------------------------------------------------------------
# exponential, logarithm, powers, roots
# ---------------------------------------------------------------------------

@relation("exp_log", 1e-9, domain=_DOMAIN_2D)
def _exp_log(rng):
    dim = int(rng.integers(2, 4))
    m = random_mv(rng, dim)
    return _res(exp(log(m)), m), _w(m=m)


@relation("exp_amplitude", 1e-10)
def _exp_amplitude(rng):
    dim = int(rng.integers(2, 4))
    m = random_mv(rng, dim, scale=1.0)
    z, _ = split_center(m)
    want = cmath.exp(2 * z) if dim == 3 else math.exp(2 * z.real)
    return abs(amplitude_squared(exp(m)) - want) / max(1.0, abs(want)), _w(m=m)


@relation("log_branches_exp", 1e-9, domain=_DOMAIN_2D)
def _log_branches(rng):
    m = random_mv(rng, 3)
    b = BranchIndex(int(rng.integers(-2, 3)), int(rng.integers(-2, 3)), bool(rng.integers(0, 2)))
    return _res(exp(log_branches(m, b)), m), _w(m=m, branch=b)


@relation("polar_recompose", 1e-9, domain=_DOMAIN_2D)
def _polar(rng):
    dim = int(rng.integers(2, 4))
    m = random_mv(rng, dim)
    pf = polar(m)
    fhat_sq = _res(gp(pf.fhat, pf.fhat), Multivector.scalar(-1.0, dim)) if dim == 3 else 0.0
    return max(_res(pf.recompose(), m), fhat_sq), _w(m=m)


@relation("de_moivre", 1e-9, domain=_DOMAIN_2D)
def _de_moivre(rng):
    dim = int(rng.integers(2, 4))
    m = random_mv(rng, dim, scale=1.0, min_amp=0.1)
    p = int(rng.integers(2, 7)) * (1 if rng.uniform() < 0.7 else -1)
    return _res(pow_real(m, float(p)), power_int(m, p)), _w(m=m, p=p)


@relation("central_power_law", 1e-9)
def _central_power(rng):
    m = random_mv(rng, 3, scale=1.0)
    z1 = complex(*rng.uniform(-1, 1, size=2))
    z2 = complex(*rng.uniform(-1, 1, size=2))
    lhs = gp(pow_center(m, z1), pow_center(m, z2))
    return _res(lhs, pow_center(m, z1 + z2)), _w(m=m, z1=z1, z2=z2)


@relation("sqrt_square", 1e-9, domain=_DOMAIN_2D)
def _sqrt_square(rng):
    dim = int(rng.integers(2, 4))
    m = random_mv(rng, dim)
    sign = "+" if rng.uniform() < 0.5 else "-"
    r = sqrt_mv(m, sign)
    return _res(gp(r, r), m), _w(m=m, sign=sign)


@relation("sqrt_principal", 1e-9, domain=_DOMAIN_2D)
def _sqrt_principal(rng):
    dim = int(rng.integers(2, 4))
    m = random_mv(rng, dim)
    return _res(sqrt_mv(m, "+"), exp(log(m) * 0.5)), _w(m=m)


@relation("log_two_vectors", 1e-10)
def _log_vectors(rng):
    dim = int(rng.integers(2, 4))
    a = Multivector.vector(rng.uniform(-2, 2, size=dim), dim)
    b = Multivector.vector(rng.uniform(-2, 2, size=dim), dim)
    return _res(log_two_vectors(a, b), log(gp(a, b))), _w(a=a, b=b)


@relation("dim1_embedding", 1e-12, domain=(NotInSubalgebra, NonRealAmplitude2D, NoPrincipalBranch, ZeroF))
def _dim1(rng):
    m = Multivector(1, rng.uniform(-2, 2, size=2))
    m3 = lift(m, 3)
    worst = 0.0
    for fn in (exp, log, cosh_mv, sinh_mv, cos_mv, sin_mv):
        worst = max(worst, _res(lift(fn(m), 3), fn(m3)))
    return worst, _w(m=m)


# ---------------------------------------------------------------------------
# trigonometric identities
# ---------------------------------------------------------------------------

def _rand_trig(rng, dim=None):
    dim = dim or int(rng.integers(1, 4))
    return Multivector(dim, rng.uniform(-1.5, 1.5, size=1 << dim))


@relation("hyperbolic_pythagorean", 1e-9)
def _hyp_pyth(rng):
    m = _rand_trig(rng)
    c, s = cosh_mv(m), sinh_mv(m)
    return _res(gp(c, c) - gp(s, s), Multivector.scalar(1.0, m.dim)) / max(1.0, norm(c) ** 2), _w(m=m)


@relation("circular_pythagorean", 1e-9)
def _circ_pyth(rng):
    m = _rand_trig(rng)
    c, s = cos_mv(m), sin_mv(m)
    return _res(gp(c, c) + gp(s, s), Multivector.scalar(1.0, m.dim)) / max(1.0, norm(c) ** 2), _w(m=m)


@relation("exp_cosh_sinh", 1e-10)
def _exp_cs(rng):
    m = _rand_trig(rng)
    return _res(exp(m), cosh_mv(m) + sinh_mv(m)), _w(m=m)


@relation("exp_jm_euler", 1e-10)
def _exp_jm(rng):
    m = _rand_trig(rng, 3)
    return _res(exp(mul_j(m)), cos_mv(m) + mul_j(sin_mv(m))), _w(m=m)


@relation("sinh_double", 1e-9)
def _sinh_double(rng):
    m = _rand_trig(rng)
    want = gp(sinh_mv(m), cosh_mv(m)) * 2.0
    return _res(sinh_mv(m * 2.0), want), _w(m=m)


@relation("trig_duality", 1e-10)
def _duality(rng):
    m = _rand_trig(rng, 3)
    r1 = _res(cosh_mv(mul_j(m)), cos_mv(m))
    r2 = _res(sinh_mv(mul_j(m)), mul_j(sin_mv(m)))
    return max(r1, r2), _w(m=m)


@relation("tan_quotient", 1e-9, domain=(NullAmplitude,))
def _tan_q(rng):
    m = _rand_trig(rng)
    return _res(tan_mv(m), tan_quotient(m)), _w(m=m)


@relation("arcsinh_jm", 1e-9, domain=(ZeroDenominator, NullAmplitude))
def _arcsinh_jm(rng):
    m = _rand_trig(rng, 3)
    return _res(arcsinh_mv(mul_j(m)), mul_j(arcsin_mv(m))), _w(m=m)


@relation("arctanh_jm", 1e-9, domain=(NullAmplitude,))
def _arctanh_jm(rng):
    m = _rand_trig(rng, 3)
    return _res(arctanh_mv(mul_j(m)), mul_j(arctan_mv(m))), _w(m=m)


@relation("arccosh_j_arccos", 1e-9, domain=(ZeroDenominator, NullAmplitude),
          note="checked as cosh preimages: principal values of arccosh X and j arccos X "
               "may differ by sign and by a log branch")
def _arccosh_jarccos(rng):
    m = _rand_trig(rng, 3)
    a = arccosh_mv(m)
    b = mul_j(arccos_mv(m))
    return max(_res(cosh_mv(a), m), _res(cosh_mv(b), m)), _w(m=m)


def _small(rng, dim):
    while True:
        m = Multivector(dim, rng.uniform(-1, 1, size=1 << dim))
        n = norm(m)
        if n > 1e-3:
            return m * (rng.uniform(0.05, 1.0) / n)


@relation("inverse_hyperbolic_roundtrip", 1e-8, domain=_DOMAIN_2D + (NullAmplitude, NotInSubalgebra))
def _inv_hyp(rng):
    dim = int(rng.integers(2, 4))
    x = _small(rng, dim)
    worst = max(_res(sinh_mv(arcsinh_mv(x)), x), _res(tanh_mv(arctanh_mv(x)), x))
    return worst, _w(x=x)


@relation("inverse_circular_roundtrip", 1e-8, domain=(NullAmplitude, ZeroDenominator))
def _inv_circ(rng):
    x = _small(rng, 3)
    worst = max(_res(sin_mv(arcsin_mv(x)), x), _res(tan_mv(arctan_mv(x)), x),
                _res(cos_mv(arccos_mv(x)), x), _res(cosh_mv(arccosh_mv(x)), x))
    return worst, _w(x=x)


@relation("sinh_zero_family", 1e-10)
def _sinh_zeros(rng):
    w, p = random_orthonormal_pair(rng)
    fhat = root_minus_one_3d(float(rng.uniform(-1, 1)), w, p)
    mn = (int(rng.integers(-3, 4)), int(rng.integers(-3, 4)))
    half = bool(rng.integers(0, 2))
    z = sinh_zeros(mn, half, fhat)
    return norm(sinh_mv(z)) / max(1.0, norm(cosh_mv(z))), _w(fhat=fhat, mn=mn, half=half)
