"""Exponential, logarithm, argument, polar form, square roots and powers.

Everything here uses the split ``M = Z + F``: ``Z`` is central (the scalar
``a`` in dims 1-2, ``a + j t`` in dim 3) and ``F`` holds grades 1-2. Because
``F**2 = -|F|**2`` is central, every analytic function of ``M`` has the form
``alpha + F * beta`` with centre-valued ``alpha, beta`` depending only on
``Z`` and ``s = |F|**2``. Centre values are carried as Python complex numbers,
``1j`` standing for ``j`` in dim 3. In dim 2 they are real on every path that
does not raise.

Dim-1 inputs are computed through their embedding in Cl(R^2) and projected
back; results that would leave Cl(R^1) raise :class:`NotInSubalgebra`.
"""

from __future__ import annotations

import cmath
import functools
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .algebra import (
    CenterComplex,
    Multivector,
    SplitScalar,
    center_scale,
    center_value,
    cliff_conj,
    from_center,
    gp,
    inverse,
    lift,
    mul_j,
    norm,
    power_int,
    principal_log,
    principal_sqrt,
    project,
    pseudoscalar,
    split_center,
)
from .config import get_tolerances
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
    ZeroFNoCentral,
)

Scalarish = Union[SplitScalar, CenterComplex]


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------

def via_dim2(func):
    """Evaluate a dim-1 argument inside Cl(R^2) and project the result back."""

    @functools.wraps(func)
    def wrapper(m, *args, **kwargs):
        if isinstance(m, Multivector) and m.dim == 1:
            out = func(lift(m, 2), *args, **kwargs)
            try:
                return project(out, 1)
            except OutOfSubspace as exc:
                raise NotInSubalgebra(f"{func.__name__} of {m!r} leaves Cl(R^1)") from exc
        return func(m, *args, **kwargs)

    return wrapper


def _scale2(m: Multivector) -> float:
    return max(1.0, float(np.dot(m.coeffs, m.coeffs)))


def f_square(f: Multivector) -> complex:
    """``|F|**2 = F conj(F) = -F**2`` as a centre value."""
    return -center_value(gp(f, f))


def _center_of(z: complex, dim: int) -> Scalarish:
    if dim == 3:
        return CenterComplex.of(z)
    return SplitScalar(z.real, 0.0)


def _series_c(s: complex, terms: int = 8) -> complex:
    # sum (-s)^k / (2k)!  ==  cos(sqrt(s))
    total, term = 0j, 1 + 0j
    for k in range(terms):
        total += term
        term *= -s / ((2 * k + 1) * (2 * k + 2))
    return total


def _series_m(s: complex, terms: int = 8) -> complex:
    # sum (-s)^k / (2k+1)!  ==  sin(sqrt(s)) / sqrt(s)
    total, term = 0j, 1 + 0j
    for k in range(terms):
        total += term
        term *= -s / ((2 * k + 2) * (2 * k + 3))
    return total


def kernel_c(s: complex) -> complex:
    """``cos(sqrt(s))``, an entire function of ``s``."""
    s = complex(s)
    if abs(s) < get_tolerances().series_switch:
        return _series_c(s)
    return cmath.cos(cmath.sqrt(s))


def kernel_m(s: complex) -> complex:
    """``sin(sqrt(s)) / sqrt(s)``, an entire function of ``s``."""
    s = complex(s)
    if abs(s) < get_tolerances().series_switch:
        return _series_m(s)
    r = cmath.sqrt(s)
    return cmath.sin(r) / r


def _sinc(t: complex) -> complex:
    return kernel_m(complex(t) * complex(t))


def _assemble(alpha: complex, f: Multivector, beta: complex) -> Multivector:
    """``alpha + F * beta`` for centre values alpha, beta."""
    return from_center(alpha, f.dim) + center_scale(f, beta)


# ---------------------------------------------------------------------------
# split and |F|
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FSplit:
    """``M = z + f`` with ``z`` central and ``f`` of grades 1-2."""

    z: Union[CenterComplex, float]
    f: Multivector

    def reassemble(self) -> Multivector:
        zc = complex(self.z)
        return from_center(zc, self.f.dim) + self.f


def split(m: Multivector) -> FSplit:
    if m.dim == 4:
        raise DimensionError("split is defined for dims 1-3")
    z, f = split_center(m)
    return FSplit(CenterComplex.of(z) if m.dim == 3 else z.real, f)


def f_invariants(f: Multivector, need_hat: bool = True):
    """``(|F|, F_hat)``: principal root of ``F conj(F)`` and ``F |F|^-1``.

    In dim 2 a negative ``F conj(F)`` gives ``|F| = e12 sqrt(.)`` and
    ``F_hat = F (e12 sqrt(.))^-1`` (the divisor stays on the right).
    Dim-1 input is embedded in Cl(R^2) and the returned ``F_hat`` lives there.
    """
    if f.dim == 1:
        f = lift(f, 2)
    if f.dim == 4:
        raise DimensionError("f_invariants is defined for dims 1-3")
    z, _ = split_center(f)
    if z != 0:
        raise OutOfSubspace("F must have grades 1-2 only")
    s = f_square(f)
    zero = abs(s) <= get_tolerances().null_amplitude * _scale2(f)
    if f.dim == 2:
        mag = SplitScalar.sqrt_of(s.real)
        if zero:
            if need_hat:
                raise ZeroF("|F| = 0: F_hat is undefined")
            return mag, None
        if mag.is_real:
            return mag, f * (1.0 / mag.re)
        e12 = Multivector.blade("e12", 2)
        return mag, gp(f, -e12) * (1.0 / mag.ps)
    rf = principal_sqrt(s)
    if zero:
        if need_hat:
            raise ZeroF("|F| = 0: F_hat is undefined")
        return CenterComplex.of(rf), None
    return CenterComplex.of(rf), center_scale(f, 1.0 / rf)


# ---------------------------------------------------------------------------
# exponential
# ---------------------------------------------------------------------------

@via_dim2
def exp(m: Multivector) -> Multivector:
    """``e^Z (cos|F| + F_hat sin|F|)`` through the kernels of ``s = |F|**2``."""
    if m.dim == 4:
        raise DimensionError("exp is implemented for dims 1-3")
    z, f = split_center(m)
    s = f_square(f)
    ez = cmath.exp(z)
    return _assemble(ez * kernel_c(s), f, ez * kernel_m(s))


# ---------------------------------------------------------------------------
# logarithm / argument
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class _LogParts:
    z: complex
    f: Multivector
    log_amp: complex   # log |M| (or log Z when F is zero / nilpotent)
    phi: complex       # arg M
    ratio: complex     # phi / |F|, finite also when |F| -> 0
    central: bool


def _log_parts(m: Multivector) -> _LogParts:
    tol = get_tolerances()
    z, f = split_center(m)
    r = center_value(gp(m, cliff_conj(m)))
    if abs(r) <= tol.null_amplitude * _scale2(m):
        raise NullAmplitude(f"|M| = 0 for {m!r}")
    s = f_square(f)
    fnorm2 = float(np.dot(f.coeffs, f.coeffs))
    two_d = m.dim == 2

    if fnorm2 == 0.0:
        if two_d and z.real < 0:
            raise ZeroFNoCentral("a negative real has no principal logarithm in Cl(R^2)")
        return _LogParts(z, f, principal_log(z), 0j, 0j, True)

    if two_d:
        if r.real < 0:
            raise NonRealAmplitude2D(f"|M|^2 = {r.real:.6g} < 0: no exponential form in Cl(R^2)")
        if s.real <= 0 and z.real <= 0:
            raise NoPrincipalBranch("hyperbolic 2D multivector with a <= 0 has no real logarithm")

    if abs(s) <= 1e-14 * _scale2(f):
        # F nilpotent: M = Z (1 + F/Z), log M = log Z + F/Z
        return _LogParts(z, f, principal_log(z), 0j, 1.0 / z, False)

    amp = principal_sqrt(r)
    rf = principal_sqrt(s)
    w = (z + 1j * rf) / amp
    if abs(w - 1) < 0.5 and abs(s) < tol.series_switch * abs(z) ** 2:
        # arctan(x)/x series in x^2 = s/Z^2, avoids cancellation for small |F|
        q = s / (z * z)
        total, term = 0j, 1 + 0j
        for k in range(12):
            total += term / (2 * k + 1)
            term *= -q
        ratio = total / z
        phi = ratio * rf
    else:
        phi = -1j * principal_log(w)
        ratio = phi / rf
    return _LogParts(z, f, principal_log(amp), phi, ratio, False)


@via_dim2
def log(m: Multivector) -> Multivector:
    """Principal logarithm ``log|M| + arg(M) F_hat``.

    Central inputs use the complex logarithm (so ``log(-1) = j pi`` in dim 3);
    a 2D negative real raises :class:`ZeroFNoCentral`.
    """
    if m.dim == 4:
        raise DimensionError("log is implemented for dims 1-3")
    p = _log_parts(m)
    return _assemble(p.log_amp, p.f, p.ratio)


def arg(m: Multivector) -> Scalarish:
    """Principal argument: ``cos(phi) = Z/|M|`` and ``sin(phi) = |F|/|M|``."""
    if m.dim == 1:
        m = lift(m, 2)
    if m.dim == 4:
        raise DimensionError("arg is defined for dims 1-3")
    z, f = split_center(m)
    r = center_value(gp(m, cliff_conj(m)))
    if abs(r) <= get_tolerances().null_amplitude * _scale2(m):
        raise NullAmplitude(f"|M| = 0 for {m!r}")
    s = f_square(f)
    if m.dim == 2:
        a, s, r = z.real, s.real, r.real
        if r < 0:
            raise NonRealAmplitude2D("arg needs a real amplitude in Cl(R^2)")
        if s > 0:
            return SplitScalar(math.atan2(math.sqrt(s), a), 0.0)
        if s == 0:
            return SplitScalar(0.0 if a > 0 else math.pi, 0.0)
        if a <= 0:
            raise NoPrincipalBranch("hyperbolic 2D multivector with a <= 0 has no principal argument")
        return SplitScalar(0.0, math.atanh(math.sqrt(-s) / a))
    amp = principal_sqrt(r)
    return CenterComplex.of(-1j * principal_log((z + 1j * principal_sqrt(s)) / amp))


@dataclass(frozen=True)
class PolarForm:
    """``M = |M| (cos phi + F_hat sin phi)``.

    In dim 2 the factors are recombined as ``(cos phi + F_hat sin phi) |M|``
    with SplitScalar values read as ``re + ps e12``.
    """

    amp: Scalarish
    fhat: Multivector
    phi: Scalarish

    def recompose(self) -> Multivector:
        dim = self.fhat.dim
        phi = complex(self.phi)
        if dim == 3:
            amp = complex(self.amp)
            return _assemble(amp * cmath.cos(phi), self.fhat, amp * cmath.sin(phi))
        cos_p = _split_mv(cmath.cos(phi))
        sin_p = _split_mv(cmath.sin(phi))
        return gp(cos_p + gp(self.fhat, sin_p), _split_mv(complex(self.amp)))


def _split_mv(z: complex) -> Multivector:
    # 2D even-subalgebra value re + im e12
    return Multivector(2, [z.real, 0.0, 0.0, z.imag])


def polar(m: Multivector) -> PolarForm:
    """Amplitude, unit direction ``F_hat`` and argument of ``M``.

    Needs ``|M| != 0`` and ``|F| != 0``; in dim 2 the amplitude must be real.
    """
    if m.dim == 1:
        m = lift(m, 2)
    if m.dim == 4:
        raise DimensionError("polar is defined for dims 1-3")
    r = center_value(gp(m, cliff_conj(m)))
    if abs(r) <= get_tolerances().null_amplitude * _scale2(m):
        raise NullAmplitude(f"|M| = 0 for {m!r}")
    if m.dim == 2 and r.real < 0:
        raise NonRealAmplitude2D("2D polar form needs a real amplitude")
    _, f = split_center(m)
    _, fhat = f_invariants(f)
    phi = arg(m)
    amp = SplitScalar.sqrt_of(r.real) if m.dim == 2 else CenterComplex.of(principal_sqrt(r))
    return PolarForm(amp, fhat, phi)


# ---------------------------------------------------------------------------
# branches
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BranchIndex:
    """Extra ``2 n pi F_hat + 2 m pi j`` (plus ``pi F_hat + pi j`` when ``half``)."""

    n: int = 0
    m: int = 0
    half: bool = False

    @property
    def is_principal(self) -> bool:
        return self.n == 0 and self.m == 0 and not self.half


def log_branches(m: Multivector, b: BranchIndex) -> Multivector:
    principal = log(m)
    if b.is_principal:
        return principal
    dim = principal.dim
    if dim != 3 and (b.m != 0 or b.half):
        raise DimensionError("the j-winding needs the dim-3 pseudoscalar")
    shift = Multivector.zero(dim)
    fturns = 2 * b.n + (1 if b.half else 0)
    jturns = 2 * b.m + (1 if b.half else 0)
    if fturns:
        work = lift(m, 2) if m.dim == 1 else m
        _, f = split_center(work)
        _, fhat = f_invariants(f)
        if fhat.dim != dim:
            fhat = project(fhat, dim)
        shift = shift + center_scale(fhat, fturns * math.pi)
    if jturns:
        shift = shift + pseudoscalar(3) * (jturns * math.pi)
    return principal + shift


# ---------------------------------------------------------------------------
# square roots
# ---------------------------------------------------------------------------

def _sign(sign) -> int:
    if sign in (1, "+"):
        return 1
    if sign in (-1, "-"):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


def scalar_roots(x: float, v: Multivector | None = None, sign=1, d: float = 0.0) -> Multivector:
    """Square roots of the real ``x`` inside Cl(R^2).

    ``x <= 0``: ``v +/- e12 sqrt(v**2 - x)`` for any vector ``v``.
    ``x > 0``: ``+/- sqrt(x + d**2) v_hat + e12 d``, or ``+/- sqrt(x)`` when v is zero.
    """
    sg = _sign(sign)
    if v is None:
        v = Multivector.zero(2)
    if v.dim != 2:
        raise DimensionError("scalar_roots works in Cl(R^2)")
    if np.any(v.coeffs[[0, 3]]):
        raise OutOfSubspace("v must be a vector")
    v2 = float(np.dot(v.coeffs, v.coeffs))
    e12 = Multivector.blade("e12", 2)
    if x <= 0:
        return v + e12 * (sg * math.sqrt(v2 - x))
    if v2 == 0.0:
        return Multivector.scalar(sg * math.sqrt(x), 2)
    return v * (sg * math.sqrt(x + d * d) / math.sqrt(v2)) + e12 * d


@via_dim2
def sqrt_mv(m: Multivector, sign="+") -> Multivector:
    """``(M +/- |M|) (M + conj(M) +/- 2|M|)^(-1/2)``.

    Real 2D inputs go to :func:`scalar_roots` (principal root ``e12 sqrt(a)``
    for ``-a``); central 3D inputs use the principal complex root.
    """
    sg = _sign(sign)
    if m.dim == 4:
        raise DimensionError("sqrt_mv is implemented for dims 1-3")
    tol = get_tolerances()
    z, f = split_center(m)
    fnorm2 = float(np.dot(f.coeffs, f.coeffs))
    if fnorm2 == 0.0:
        if m.dim == 2:
            return scalar_roots(z.real, sign=sg)
        return from_center(sg * principal_sqrt(z), 3)
    r = center_value(gp(m, cliff_conj(m)))
    if m.dim == 2:
        if r.real < -tol.null_amplitude * _scale2(m):
            raise NonRealAmplitude2D("no square root: |M| is not real")
        amp = math.sqrt(max(r.real, 0.0))
        den2 = 2.0 * _stable_half(z.real, sg * amp, f)
        if abs(den2) <= tol.null_amplitude * math.sqrt(_scale2(m)):
            raise ZeroDenominator("M + conj(M) +/- 2|M| vanishes")
        if den2 < 0:
            raise NoPrincipalBranch(
                "the '-' root needs a > 0 and a - |M| > 0" if sg < 0
                else "a + |M| < 0: no real square root")
        return (f + den2 / 2.0) * (1.0 / math.sqrt(den2))
    amp = principal_sqrt(r)
    den2 = 2.0 * _stable_half(z, sg * amp, f)
    if abs(den2) <= tol.null_amplitude * math.sqrt(_scale2(m)):
        raise ZeroDenominator("M + conj(M) +/- 2|M| vanishes")
    num = f + from_center(den2 / 2.0, 3)
    return center_scale(num, 1.0 / principal_sqrt(den2))


def _stable_half(z, amp, f: Multivector):
    """``Z + amp`` without cancellation, using ``(Z + amp)(Z - amp) = F^2``."""
    plus, minus = z + amp, z - amp
    if abs(plus) >= abs(minus) or minus == 0:
        return plus
    f2 = center_value(gp(f, f))
    if not isinstance(z, complex):
        f2 = f2.real
    return f2 / minus


def root_minus_one_3d(theta: float, what: Multivector, wperp: Multivector) -> Multivector:
    """``sinh(theta) w_perp + j cosh(theta) w_hat``, a square root of -1."""
    if what.dim != 3 or wperp.dim != 3:
        raise DimensionError("root_minus_one_3d works in Cl(R^3)")
    tol = get_tolerances().unit
    for v in (what, wperp):
        if np.any(v.coeffs[[0, 4, 5, 6, 7]]):
            raise OutOfSubspace("arguments must be vectors")
    a, b = what.coeffs[1:4], wperp.coeffs[1:4]
    if abs(a @ a - 1) > tol or abs(b @ b - 1) > tol or abs(a @ b) > tol:
        raise NonUnitVector("w_hat and w_perp must be orthonormal")
    return wperp * math.sinh(theta) + mul_j(what) * math.cosh(theta)


# ---------------------------------------------------------------------------
# powers
# ---------------------------------------------------------------------------

def pow_int(m: Multivector, p: int) -> Multivector:
    """Integer power by repeated products (inverse first for ``p < 0``)."""
    return power_int(m, int(p))


def _pow_center(m: Multivector, x: complex) -> Multivector:
    p = _log_parts(m)
    if p.central:
        return from_center(cmath.exp(x * p.log_amp), m.dim)
    big = cmath.exp(x * p.log_amp)
    xphi = x * p.phi
    return _assemble(big * cmath.cos(xphi), p.f, big * x * p.ratio * _sinc(xphi))


@via_dim2
def pow_real(m: Multivector, x: float) -> Multivector:
    """``|M|^x (cos(x phi) + F_hat sin(x phi))``."""
    if m.dim == 4:
        raise DimensionError("pow_real is implemented for dims 1-3")
    x = float(x)
    if x.is_integer():
        z, f = split_center(m)
        if m.dim == 2 and not np.any(f.coeffs) and z.real < 0:
            return power_int(m, int(x))
    return _pow_center(m, complex(x))


def pow_center(m: Multivector, x) -> Multivector:
    """Power with a centre-valued exponent ``x = re + im j`` (dim 3)."""
    if m.dim != 3:
        raise DimensionError("complex exponents need the dim-3 centre")
    return _pow_center(m, complex(x))


def _as_mv(p, dim: int) -> Multivector:
    if isinstance(p, Multivector):
        return p
    if isinstance(p, CenterComplex):
        return p.to_multivector(dim)
    return Multivector.scalar(float(p), dim)


def pow_mv(m: Multivector, p, side: str = "right", branch: BranchIndex | None = None) -> Multivector:
    """``exp(log(M) P)`` (side="right") or ``exp(P log(M))`` (side="left")."""
    p = _as_mv(p, m.dim)
    lg = log(m) if branch is None else log_branches(m, branch)
    if side == "right":
        return exp(gp(lg, p))
    if side == "left":
        return exp(gp(p, lg))
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def log_base(base: Multivector, y: Multivector, side: str = "right") -> Multivector:
    """Solve ``base**P = y`` for P: ``log(base)^-1 log(y)`` for the right-sided power."""
    lb = log(base)
    ly = log(y)
    try:
        inv = inverse(lb)
    except NullAmplitude as exc:
        raise NullAmplitude(f"log of the base {base!r} is not invertible") from exc
    if side == "right":
        return gp(inv, ly)
    if side == "left":
        return gp(ly, inv)
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def log_two_vectors(a: Multivector, b: Multivector) -> Multivector:
    """``log(a b) = log(|a||b|) + theta (a^b)/|a^b|`` for vectors a, b."""
    if a.dim != b.dim:
        raise DimensionError("dimension mismatch")
    ab = gp(a, b)
    dot = float(ab.coeffs[0])
    wedge = ab - dot
    na, nb = norm(a), norm(b)
    if na == 0 or nb == 0:
        raise NullAmplitude("zero vector")
    wn = norm(wedge)
    if wn <= 1e-14 * na * nb:
        # parallel: the product is the real a.b
        return log(Multivector.scalar(dot, a.dim))
    theta = math.atan2(wn, dot)
    return Multivector.scalar(math.log(na * nb), a.dim) + wedge * (theta / wn)
