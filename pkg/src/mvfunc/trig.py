"""Circular and hyperbolic functions of multivectors and their inverses.

The forward functions use the same ``M = Z + F`` split as :func:`mvfunc.exp`:
with ``s = |F|**2``,

    cosh M = cosh Z cos|F| + F sinh Z sin|F|/|F|
    cos M  = cos Z cosh|F| - F sin Z sinh|F|/|F|

and similarly for sinh and sin. The kernels only see ``s`` so neither the
sign of ``|F|`` nor a division by ``|F|`` enters.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .algebra import Multivector, center_scale, gp, inverse, mul_j, pseudoscalar, split_center
from .config import get_tolerances
from .elementary import _assemble, f_square, kernel_c, kernel_m, log, sqrt_mv, via_dim2
from .errors import DimensionError, NonUnitVector, OutOfSubspace


def _parts(m: Multivector):
    if m.dim == 4:
        raise DimensionError("trigonometric functions are implemented for dims 1-3")
    z, f = split_center(m)
    return z, f, f_square(f)


@via_dim2
def cosh_mv(m: Multivector) -> Multivector:
    z, f, s = _parts(m)
    return _assemble(cmath.cosh(z) * kernel_c(s), f, cmath.sinh(z) * kernel_m(s))


@via_dim2
def sinh_mv(m: Multivector) -> Multivector:
    z, f, s = _parts(m)
    return _assemble(cmath.sinh(z) * kernel_c(s), f, cmath.cosh(z) * kernel_m(s))


@via_dim2
def cos_mv(m: Multivector) -> Multivector:
    z, f, s = _parts(m)
    # cosh(sqrt(s)) = kernel_c(-s), sinh(sqrt(s))/sqrt(s) = kernel_m(-s)
    return _assemble(cmath.cos(z) * kernel_c(-s), f, -cmath.sin(z) * kernel_m(-s))


@via_dim2
def sin_mv(m: Multivector) -> Multivector:
    z, f, s = _parts(m)
    return _assemble(cmath.sin(z) * kernel_c(-s), f, cmath.cos(z) * kernel_m(-s))


def tan_mv(m: Multivector) -> Multivector:
    """``sin M cos(M)^-1`` (the two factors commute)."""
    return gp(sin_mv(m), inverse(cos_mv(m)))


def tanh_mv(m: Multivector) -> Multivector:
    return gp(sinh_mv(m), inverse(cosh_mv(m)))


@via_dim2
def tan_quotient(m: Multivector) -> Multivector:
    """``(tan Z + F_hat tanh|F|)(1 - F_hat tanh|F| tan Z)^-1``; cross-check for :func:`tan_mv`."""
    z, f, s = _parts(m)
    # F_hat tanh|F| = F * tanh(r)/r with r = sqrt(s)
    th = kernel_m(-s) / kernel_c(-s)
    tz = cmath.tan(z)
    num = _assemble(tz, f, th)
    den = _assemble(1.0, f, -th * tz)
    return gp(num, inverse(den))


def _one(m: Multivector) -> Multivector:
    return Multivector.scalar(1.0, m.dim)


def arcsinh_mv(x: Multivector) -> Multivector:
    """``log((1 + X^2)^(1/2) + X)`` with principal root and log."""
    return log(sqrt_mv(_one(x) + gp(x, x), "+") + x)


def arccosh_mv(x: Multivector) -> Multivector:
    """``log(X + (X^2 - 1)^(1/2))``."""
    return log(x + sqrt_mv(gp(x, x) - _one(x), "+"))


def arctanh_mv(x: Multivector) -> Multivector:
    """``(log(1 + X) - log(1 - X)) / 2``."""
    one = _one(x)
    return (log(one + x) - log(one - x)) * 0.5


def _need3(x: Multivector, name: str) -> None:
    if x.dim != 3:
        raise DimensionError(f"{name} needs the dim-3 pseudoscalar j")


def arcsin_mv(x: Multivector) -> Multivector:
    """``-j log((1 - X^2)^(1/2) + j X)``."""
    _need3(x, "arcsin_mv")
    root = sqrt_mv(_one(x) - gp(x, x), "+")
    return -mul_j(log(root + mul_j(x)))


def arccos_mv(x: Multivector) -> Multivector:
    """``-j log(X + j (1 - X^2)^(1/2))``."""
    _need3(x, "arccos_mv")
    root = sqrt_mv(_one(x) - gp(x, x), "+")
    return -mul_j(log(x + mul_j(root)))


def arctan_mv(x: Multivector) -> Multivector:
    """``-(j/2) (log(1 + j X) - log(1 - j X))``."""
    _need3(x, "arctan_mv")
    one, jx = _one(x), mul_j(x)
    return -mul_j(log(one + jx) - log(one - jx)) * 0.5


def sinh_zeros(mn: tuple[int, int], half: bool, fhat: Multivector) -> Multivector:
    """Zero of sinh: ``m pi F_hat + n pi j``, shifted by ``(pi/2)(F_hat + j)`` when ``half``.

    ``fhat`` must have grades 1-2 and square to -1 (dim 3).
    """
    if fhat.dim != 3:
        raise DimensionError("sinh_zeros works in Cl(R^3)")
    z, _ = split_center(fhat)
    if z != 0:
        raise OutOfSubspace("fhat must have grades 1-2 only")
    sq = gp(fhat, fhat)
    if float(np.max(np.abs((sq + 1.0).coeffs))) > get_tolerances().unit:
        raise NonUnitVector("fhat must square to -1")
    m, n = mn
    j = pseudoscalar(3)
    out = center_scale(fhat, m * math.pi) + j * (n * math.pi)
    if half:
        out = out + (fhat + j) * (math.pi / 2)
    return out
