"""Multivectors of Cl(R^n) for n = 1..4.

Coefficients are stored densely in a fixed blade order::

    dim 1: 1, e1
    dim 2: 1, e1, e2, e12
    dim 3: 1, e1, e2, e3, e12, e31, e23, e123
    dim 4: 1, e1, e2, e3, e4, e12, e13, e14, e23, e24, e34,
           e123, e124, e134, e234, e1234

Note the dim-3 bivector ``e31`` (not ``e13``), so that the bivectors are the
duals ``j e3, j e2, j e1`` of the vectors with ``j = e123``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Union

import numpy as np

from .config import get_tolerances
from .errors import (
    DimensionError,
    NonFiniteError,
    NonScalarRadicand,
    NullAmplitude,
    OutOfSubspace,
)

DIMS = (1, 2, 3, 4)

_BLADES = {
    1: [(), (1,)],
    2: [(), (1,), (2,), (1, 2)],
    3: [(), (1,), (2,), (3,), (1, 2), (3, 1), (2, 3), (1, 2, 3)],
    4: [(), (1,), (2,), (3,), (4,),
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
        (1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 3, 4)],
}


def blade_names(dim: int) -> list[str]:
    return ["1" if not b else "e" + "".join(map(str, b)) for b in _BLADES[dim]]


def _reduce_word(word: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort a product of basis vectors, cancelling e_k e_k = 1.

    Returns the sorted (square free) blade and the sign picked up from the
    anticommuting swaps.
    """
    w = list(word)
    sign = 1
    # bubble sort: every adjacent swap of distinct vectors flips the sign
    for i in range(len(w)):
        for k in range(len(w) - 1 - i):
            if w[k] > w[k + 1]:
                w[k], w[k + 1] = w[k + 1], w[k]
                sign = -sign
    out: list[int] = []
    for x in w:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return tuple(out), sign


@lru_cache(maxsize=None)
def _tables(dim: int):
    blades = _BLADES[dim]
    n = len(blades)
    # canonical blade for each sorted tuple, with orientation sign
    canon = {}
    for idx, b in enumerate(blades):
        s, sgn = _reduce_word(b)
        canon[s] = (idx, sgn)
    index = np.zeros((n, n), dtype=np.intp)
    sign = np.zeros((n, n))
    for i, bi in enumerate(blades):
        for k, bk in enumerate(blades):
            s, sgn = _reduce_word(bi + bk)
            idx, orient = canon[s]
            index[i, k] = idx
            sign[i, k] = sgn * orient
    grades = np.array([len(b) for b in blades])
    flat_index = index.ravel()
    flat_sign = sign.ravel()
    return canon, index, sign, grades, flat_index, flat_sign


def grades_of(dim: int) -> np.ndarray:
    return _tables(dim)[3]


def blade_lookup(word: Sequence[int], dim: int) -> tuple[int, int]:
    """Index and sign of the product ``e_{w1} e_{w2} ...`` in canonical order.

    ``blade_lookup((1, 3), 3)`` is ``(5, -1)`` because ``e1 e3 = -e31``.
    """
    if any(not 1 <= w <= dim for w in word):
        raise DimensionError(f"basis vector index out of range for dim {dim}: {tuple(word)}")
    s, sgn = _reduce_word(word)
    idx, orient = _tables(dim)[0][s]
    return idx, sgn * orient


class Multivector:
    """Immutable element of Cl(R^dim).

    Arithmetic operators are overloaded: ``*`` is the geometric product,
    ``/`` right-multiplies by the inverse and ``~`` is reversion. Plain
    numbers act as scalars.
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Union[Sequence[float], np.ndarray]):
        if dim not in DIMS:
            raise DimensionError(f"dim must be one of {DIMS}, got {dim}")
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (1 << dim,):
            raise DimensionError(
                f"dim {dim} needs {1 << dim} coefficients, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise NonFiniteError(f"non-finite coefficient in {arr.tolist()}")
        arr.flags.writeable = False
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    # -- constructors -----------------------------------------------------
    @classmethod
    def scalar(cls, x: float, dim: int) -> "Multivector":
        c = np.zeros(1 << dim)
        c[0] = x
        return cls(dim, c)

    @classmethod
    def zero(cls, dim: int) -> "Multivector":
        return cls(dim, np.zeros(1 << dim))

    @classmethod
    def blade(cls, name: str, dim: int, value: float = 1.0) -> "Multivector":
        """Basis blade by name, e.g. ``"e12"``, ``"e31"`` or ``"e21"`` (= -e12)."""
        c = np.zeros(1 << dim)
        if name == "1":
            c[0] = value
            return cls(dim, c)
        if not (name.startswith("e") and name[1:].isdigit()):
            raise ValueError(f"not a blade name: {name!r}")
        word = [int(ch) for ch in name[1:]]
        idx, sgn = blade_lookup(word, dim)
        c[idx] = sgn * value
        return cls(dim, c)

    @classmethod
    def vector(cls, components: Sequence[float], dim: int | None = None) -> "Multivector":
        dim = len(components) if dim is None else dim
        c = np.zeros(1 << dim)
        c[1:1 + len(components)] = components
        return cls(dim, c)

    # -- basic protocol ---------------------------------------------------
    def __repr__(self) -> str:
        return f"Multivector({self.dim}, {self.coeffs.tolist()})"

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.dim == other.dim and bool(np.array_equal(self.coeffs, other.coeffs))
        if isinstance(other, (int, float)):
            return self == Multivector.scalar(other, self.dim)
        return NotImplemented

    __hash__ = None

    def __getitem__(self, name: str) -> float:
        idx, sgn = (0, 1) if name == "1" else blade_lookup([int(c) for c in name[1:]], self.dim)
        return sgn * float(self.coeffs[idx])

    def _coerce(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector.scalar(float(other), self.dim)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.dim, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.dim, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Multivector(self.dim, other.coeffs - self.coeffs)

    def __neg__(self):
        return Multivector(self.dim, -self.coeffs)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.dim, self.coeffs * float(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gp(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.dim, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return Multivector(self.dim, self.coeffs / float(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gp(self, inverse(other))

    def __rtruediv__(self, other):
        if isinstance(other, (int, float, np.floating, np.integer)):
            return inverse(self) * float(other)
        return NotImplemented

    def __invert__(self):
        return reversion(self)

    def __pow__(self, p):
        if isinstance(p, (int, np.integer)):
            return power_int(self, int(p))
        return NotImplemented

    # -- convenience ------------------------------------------------------
    def grade(self, k: int) -> "Multivector":
        return grade(self, k).value

    def scale(self, z: complex) -> "Multivector":
        """Multiply by a central scalar; in dim 3 ``z.imag`` multiplies j."""
        return center_scale(self, z)

    @property
    def is_scalar(self) -> bool:
        return not np.any(self.coeffs[1:])


def construct(dim: int, coeffs: Sequence[float]) -> Multivector:
    return Multivector(dim, coeffs)


def _check_dims(a: Multivector, b: Multivector) -> None:
    if a.dim != b.dim:
        raise DimensionError(f"dimension mismatch: {a.dim} vs {b.dim}")


def add(a: Multivector, b: Multivector) -> Multivector:
    _check_dims(a, b)
    return Multivector(a.dim, a.coeffs + b.coeffs)


def sub(a: Multivector, b: Multivector) -> Multivector:
    _check_dims(a, b)
    return Multivector(a.dim, a.coeffs - b.coeffs)


def gp(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product."""
    _check_dims(a, b)
    _, _, _, _, flat_index, flat_sign = _tables(a.dim)
    prod = np.multiply.outer(a.coeffs, b.coeffs).ravel() * flat_sign
    return Multivector(a.dim, np.bincount(flat_index, weights=prod, minlength=1 << a.dim))


def right_mul_matrix(m: Multivector) -> np.ndarray:
    """Matrix ``R`` with ``gp(p, m).coeffs == R @ p.coeffs`` for every ``p``."""
    _, index, sign, _, _, _ = _tables(m.dim)
    n = 1 << m.dim
    r = np.zeros((n, n))
    rows = np.arange(n)[:, None]
    r[index, np.broadcast_to(rows, index.shape)] = sign * m.coeffs[None, :]
    return r


def power_int(m: Multivector, p: int) -> Multivector:
    """``m**p`` by repeated squaring; negative ``p`` goes through the inverse."""
    if p < 0:
        m = inverse(m)
        p = -p
    result = Multivector.scalar(1.0, m.dim)
    base = m
    while p:
        if p & 1:
            result = gp(result, base)
        p >>= 1
        if p:
            base = gp(base, base)
    return result


@dataclass(frozen=True)
class GradePart:
    k: int
    value: Multivector


def grade(m: Multivector, k: int) -> GradePart:
    if not 0 <= k <= m.dim:
        raise DimensionError(f"grade {k} out of range for dim {m.dim}")
    mask = grades_of(m.dim) == k
    return GradePart(k, Multivector(m.dim, np.where(mask, m.coeffs, 0.0)))


def select_grades(m: Multivector, ks) -> Multivector:
    mask = np.isin(grades_of(m.dim), list(ks))
    return Multivector(m.dim, np.where(mask, m.coeffs, 0.0))


def _grade_signs(dim: int, kind: str) -> np.ndarray:
    g = grades_of(dim)
    if kind == "star":
        return (-1.0) ** g
    if kind == "rev":
        return (-1.0) ** (g * (g - 1) // 2)
    if kind == "conj":
        return (-1.0) ** (g * (g + 1) // 2)
    if kind == "sharp":
        return np.where(np.isin(g, (1, 3, 4)), -1.0, 1.0)
    raise ValueError(kind)


def space_inversion(m: Multivector) -> Multivector:
    return Multivector(m.dim, m.coeffs * _grade_signs(m.dim, "star"))


def reversion(m: Multivector) -> Multivector:
    return Multivector(m.dim, m.coeffs * _grade_signs(m.dim, "rev"))


def cliff_conj(m: Multivector) -> Multivector:
    """Clifford conjugation: grade signs ``+, -, -, +, +, ...``."""
    return Multivector(m.dim, m.coeffs * _grade_signs(m.dim, "conj"))


def inner(a: Multivector, b: Multivector) -> float:
    """Scalar part of ``a * rev(b)``; equals the Euclidean dot of the coefficients."""
    _check_dims(a, b)
    return float(gp(a, reversion(b)).coeffs[0])


def norm(m: Multivector) -> float:
    """``sqrt(inner(m, m))``, computed from the coefficients directly."""
    return math.sqrt(float(np.dot(m.coeffs, m.coeffs)))


# ---------------------------------------------------------------------------
# Centre values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CenterComplex:
    """Element ``re + im j`` of the centre of Cl(R^3)."""

    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "CenterComplex":
        z = complex(z)
        return cls(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(complex(self))

    def to_multivector(self, dim: int = 3) -> Multivector:
        return from_center(complex(self), dim)


@dataclass(frozen=True)
class SplitScalar:
    """Real number ``re`` or bivector multiple ``ps * e12`` (never both).

    Used for 2D amplitudes and arguments: the square root of a negative real
    is taken to be ``e12 * sqrt(-x)``.
    """

    re: float
    ps: float

    def __post_init__(self):
        if self.re != 0.0 and self.ps != 0.0:
            raise ValueError(f"SplitScalar must be real or pseudoscalar, got {self}")

    @classmethod
    def sqrt_of(cls, x: float) -> "SplitScalar":
        return cls(math.sqrt(x), 0.0) if x >= 0 else cls(0.0, math.sqrt(-x))

    @property
    def is_real(self) -> bool:
        return self.ps == 0.0

    def __abs__(self) -> float:
        return math.hypot(self.re, self.ps)

    def __complex__(self) -> complex:
        # e12 plays the role of the imaginary unit inside the even subalgebra
        return complex(self.re, self.ps)

    def to_multivector(self, dim: int = 2) -> Multivector:
        c = np.zeros(4)
        c[0], c[3] = self.re, self.ps
        return Multivector(2, c)


def center_value(m: Multivector) -> complex:
    """The central part as a Python complex (``a + t*1j``, t the j coefficient in dim 3)."""
    if m.dim == 3:
        return complex(m.coeffs[0], m.coeffs[7])
    return complex(m.coeffs[0], 0.0)


def from_center(z: complex, dim: int) -> Multivector:
    c = np.zeros(1 << dim)
    c[0] = z.real
    if dim == 3:
        c[7] = z.imag
    return Multivector(dim, c)


_J_PERM = np.array([7, 6, 5, 4, 3, 2, 1, 0])
_J_SIGN = np.array([-1.0, -1.0, -1.0, -1.0, 1.0, 1.0, 1.0, 1.0])


def mul_j(m: Multivector) -> Multivector:
    """``j * m`` in dim 3 (j = e123 is central)."""
    if m.dim != 3:
        raise DimensionError("j = e123 exists only in dim 3")
    return Multivector(3, m.coeffs[_J_PERM] * _J_SIGN)


def center_scale(m: Multivector, z: complex) -> Multivector:
    z = complex(z)
    if m.dim != 3 or z.imag == 0.0:
        return Multivector(m.dim, m.coeffs * z.real)
    return Multivector(3, m.coeffs * z.real + mul_j(m).coeffs * z.imag)


def split_center(m: Multivector) -> tuple[complex, Multivector]:
    """``(Z, F)`` with Z the central part and F the grade 1-2 remainder."""
    z = center_value(m)
    c = m.coeffs.copy()
    c[0] = 0.0
    if m.dim == 3:
        c[7] = 0.0
    return z, Multivector(m.dim, c)


def principal_sqrt(z: complex) -> complex:
    """Principal complex root: cut on the negative reals, ``re >= 0`` and ``im >= 0`` on ties."""
    z = complex(z.real + 0.0, z.imag + 0.0)  # -0.0 -> 0.0 keeps us on the upper lip
    return cmath.sqrt(z)


def principal_log(z: complex) -> complex:
    return cmath.log(complex(z.real + 0.0, z.imag + 0.0))


def _null_threshold(m: Multivector) -> float:
    return get_tolerances().null_amplitude * max(1.0, float(np.dot(m.coeffs, m.coeffs)))


def amplitude_squared(m: Multivector) -> complex:
    """``M * conj(M)`` as a centre value (real for dim <= 2)."""
    if m.dim == 4:
        raise DimensionError("use amplitude4 for dim 4")
    return center_value(gp(m, cliff_conj(m)))


def amplitude(m: Multivector) -> Union[SplitScalar, CenterComplex]:
    """Principal square root of ``M * conj(M)``.

    Dims 1-2 give a :class:`SplitScalar` (a negative radicand yields a
    multiple of e12), dim 3 a :class:`CenterComplex`.
    """
    if m.dim == 4:
        raise DimensionError("amplitude is defined here for dim <= 3; use amplitude4")
    r = amplitude_squared(m)
    if m.dim <= 2:
        return SplitScalar.sqrt_of(r.real)
    return CenterComplex.of(principal_sqrt(r))


def is_null(m: Multivector) -> bool:
    if m.dim == 4:
        return abs(_radicand4(m)) <= _null_threshold(m) ** 2
    return abs(amplitude_squared(m)) <= _null_threshold(m)


def inverse(m: Multivector) -> Multivector:
    """``conj(M) / (M conj(M))``; dim 4 is delegated to :func:`inverse4`."""
    if m.dim == 4:
        return inverse4(m)
    mc = cliff_conj(m)
    r = center_value(gp(m, mc))
    if abs(r) <= _null_threshold(m):
        raise NullAmplitude(f"M conj(M) = {r} vanishes; {m!r} has no inverse")
    return center_scale(mc, 1.0 / r)


# ---------------------------------------------------------------------------
# Four dimensions
# ---------------------------------------------------------------------------

def sharp(m: Multivector) -> Multivector:
    """Flip the signs of grades 1, 3 and 4 (dim 4 only)."""
    if m.dim != 4:
        raise DimensionError("sharp is a dim-4 involution")
    return Multivector(4, m.coeffs * _grade_signs(4, "sharp"))


def _radicand4_mv(m: Multivector) -> Multivector:
    mm = gp(m, cliff_conj(m))
    return gp(mm, sharp(mm))


def _radicand4(m: Multivector) -> float:
    rad = _radicand4_mv(m)
    resid = float(np.max(np.abs(rad.coeffs[1:])))
    scale = max(1.0, float(np.dot(m.coeffs, m.coeffs))) ** 2
    if resid > 1e-10 * scale:
        raise NonScalarRadicand(f"M conj(M) (M conj(M))# has non-scalar part {resid:.3e}")
    return float(rad.coeffs[0])


def amplitude4(m: Multivector) -> CenterComplex:
    """Principal fourth root of the scalar ``M conj(M) (M conj(M))#``."""
    if m.dim != 4:
        raise DimensionError("amplitude4 needs dim 4")
    rho = _radicand4(m)
    return CenterComplex.of(principal_sqrt(principal_sqrt(complex(rho))))


def inverse4(m: Multivector) -> Multivector:
    if m.dim != 4:
        raise DimensionError("inverse4 needs dim 4")
    rho = _radicand4(m)
    if abs(rho) <= _null_threshold(m) ** 2:
        raise NullAmplitude(f"|M|^4 = {rho} vanishes")
    mc = cliff_conj(m)
    return gp(mc, sharp(gp(m, mc))) * (1.0 / rho)


# ---------------------------------------------------------------------------
# Misc
# ---------------------------------------------------------------------------

def geometric_series(m: Multivector, n: int) -> Multivector:
    """``1 + M + ... + M**n`` as ``(1 - M)^-1 (1 - M**(n+1))``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    one = Multivector.scalar(1.0, m.dim)
    return gp(inverse(one - m), one - power_int(m, n + 1))


def is_vector(m: Multivector, tol: float = 0.0) -> bool:
    mask = grades_of(m.dim) != 1
    return bool(np.all(np.abs(m.coeffs[mask]) <= tol))


def vector_quotient(v: Multivector, w: Multivector) -> Multivector:
    """``v / w = v w / w**2`` for vectors; lands in the even subalgebra."""
    _check_dims(v, w)
    if not (is_vector(v) and is_vector(w)):
        raise OutOfSubspace("vector_quotient needs grade-1 arguments")
    w2 = float(np.dot(w.coeffs, w.coeffs))
    if w2 == 0.0:
        raise ZeroDivisionError("division by the zero vector")
    return gp(v, w) * (1.0 / w2)


def lift(m: Multivector, dim: int) -> Multivector:
    """Embed into a higher dimension (blades keep their meaning)."""
    if dim < m.dim:
        raise DimensionError("lift goes to a larger dimension")
    c = np.zeros(1 << dim)
    for idx, name in enumerate(blade_names(m.dim)):
        if idx == 0:
            c[0] = m.coeffs[0]
            continue
        j, s = blade_lookup([int(ch) for ch in name[1:]], dim)
        c[j] = s * m.coeffs[idx]
    return Multivector(dim, c)


def project(m: Multivector, dim: int, tol: float = 0.0) -> Multivector:
    """Inverse of :func:`lift`; raises if ``m`` has weight outside Cl(R^dim)."""
    c = np.zeros(1 << dim)
    used = np.zeros(1 << m.dim, dtype=bool)
    for idx, name in enumerate(blade_names(dim)):
        if idx == 0:
            j, s = 0, 1
        else:
            j, s = blade_lookup([int(ch) for ch in name[1:]], m.dim)
        c[idx] = s * m.coeffs[j]
        used[j] = True
    rest = np.abs(m.coeffs[~used])
    if rest.size and float(rest.max()) > tol * max(1.0, norm(m)):
        raise OutOfSubspace(f"value has components outside Cl(R^{dim})")
    return Multivector(dim, c)


def pseudoscalar(dim: int) -> Multivector:
    c = np.zeros(1 << dim)
    c[-1] = 1.0
    return Multivector(dim, c)


def unit_vectors(dim: int) -> list[Multivector]:
    return [Multivector.blade(f"e{k}", dim) for k in range(1, dim + 1)]
