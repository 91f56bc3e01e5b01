"""Linear multivector functions: sandwiches, reflections, rotations, Sylvester."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    Multivector,
    cliff_conj,
    gp,
    grades_of,
    inverse,
    is_null,
    norm,
    reversion,
)
from .config import get_tolerances
from .errors import DimensionError, NonUnitRotor, NonUnitVector, NullAmplitude, OutOfSubspace


@dataclass(frozen=True)
class LinearTermList:
    """``M -> sum_k R_k M S_k``."""

    terms: tuple[tuple[Multivector, Multivector], ...]

    def __post_init__(self):
        terms = tuple((r, s) for r, s in self.terms)
        if not terms:
            raise ValueError("a linear function needs at least one term")
        dims = {x.dim for pair in terms for x in pair}
        if len(dims) != 1:
            raise DimensionError("all terms must share one dimension")
        object.__setattr__(self, "terms", terms)

    @property
    def dim(self) -> int:
        return self.terms[0][0].dim


def linear_apply(f: LinearTermList, m: Multivector) -> Multivector:
    if m.dim != f.dim:
        raise DimensionError("dimension mismatch")
    out = Multivector.zero(m.dim)
    for r, s in f.terms:
        out = out + gp(gp(r, m), s)
    return out


def _check_vector(v: Multivector) -> None:
    grades_ok = np.zeros(1 << v.dim, dtype=bool)
    grades_ok[1:v.dim + 1] = True
    if np.any(v.coeffs[~grades_ok]):
        raise OutOfSubspace("expected a vector")


def reflect(m: Multivector, v: Multivector, normalize: bool = False) -> Multivector:
    """``-v M v`` for a unit vector v (rescaled first when ``normalize``)."""
    if m.dim != v.dim:
        raise DimensionError("dimension mismatch")
    _check_vector(v)
    n = norm(v)
    if normalize:
        if n == 0:
            raise NonUnitVector("cannot normalize the zero vector")
        v = v * (1.0 / n)
    elif abs(n - 1.0) > get_tolerances().unit:
        raise NonUnitVector(f"reflection vector has length {n:.6g}")
    return -gp(gp(v, m), v)


def _check_rotor(r: Multivector) -> None:
    rr = gp(r, reversion(r)) - 1.0
    if float(np.max(np.abs(rr.coeffs))) > get_tolerances().unit:
        raise NonUnitRotor(f"R rev(R) != 1 for {r!r}")


def _even_mask(dim: int) -> np.ndarray:
    return grades_of(dim) % 2 == 0


def rotate3(m: Multivector, r: Multivector) -> Multivector:
    """``R M rev(R)`` for an even unit rotor R."""
    r = _as_rotor(r, m.dim)
    if np.any(r.coeffs[~_even_mask(r.dim)]):
        raise OutOfSubspace("rotor must be even")
    _check_rotor(r)
    return gp(gp(r, m), reversion(r))


def _as_rotor(r, dim: int) -> Multivector:
    if not isinstance(r, Multivector):
        return Multivector.scalar(float(r), dim)
    if r.dim != dim:
        raise DimensionError("dimension mismatch")
    return r


_SPAN4 = np.array([False, True, True, True, False, False, False, True])


def rotate4(m: Multivector, r: Multivector, s: Multivector) -> Multivector:
    """``R M S`` acting on ``x e1 + y e2 + z e3 + t j`` (a copy of R^4 in Cl(R^3))."""
    if m.dim != 3:
        raise DimensionError("rotate4 works on the dim-3 embedding of R^4")
    r, s = _as_rotor(r, 3), _as_rotor(s, 3)
    if np.any(m.coeffs[~_SPAN4]):
        raise OutOfSubspace("m must lie in span{e1, e2, e3, j}")
    _check_rotor(r)
    _check_rotor(s)
    return gp(gp(r, m), s)


def sylvester_solve(a: Multivector, b: Multivector, y: Multivector,
                    mirror: bool = False) -> Multivector:
    """Solve ``A M + M B = Y``.

    With ``A`` invertible, left-multiplying by ``A^-1`` and eliminating the
    right factor through ``conj(B)`` gives

        M = (B + conj(B) + A^-1 B conj(B) + A)^-1 (A^-1 Y conj(B) + Y).

    Here ``B + conj(B)`` and ``B conj(B)`` are central, which is what lets the
    operator collapse to a single multivector. With ``mirror=True`` the roles
    of ``A`` and ``B`` swap: eliminating from the other side (through
    ``conj(A)`` and ``B^-1``) needs only ``B`` invertible and gives

        M = (conj(A) Y B^-1 + Y)(A + conj(A) + A conj(A) B^-1 + B)^-1.
    """
    if not (a.dim == b.dim == y.dim):
        raise DimensionError("dimension mismatch")
    if a.dim == 4:
        raise DimensionError("sylvester_solve needs a central B + conj(B); dims 1-3 only")
    if not mirror:
        if is_null(a):
            raise NullAmplitude("A has zero amplitude; pass mirror=True to eliminate through B")
        a_inv = inverse(a)
        bb = cliff_conj(b)
        op = b + bb + gp(gp(a_inv, b), bb) + a
        rhs = gp(gp(a_inv, y), bb) + y
        try:
            return gp(inverse(op), rhs)
        except NullAmplitude as exc:
            raise NullAmplitude("combined operator B + conj(B) + A^-1 B conj(B) + A is singular") from exc
    if is_null(b):
        raise NullAmplitude("B has zero amplitude; the mirrored form needs B invertible")
    b_inv = inverse(b)
    ab = cliff_conj(a)
    op = a + ab + gp(gp(a, ab), b_inv) + b
    lhs = gp(gp(ab, y), b_inv) + y
    try:
        return gp(lhs, inverse(op))
    except NullAmplitude as exc:
        raise NullAmplitude("combined operator A + conj(A) + A conj(A) B^-1 + B is singular") from exc


def rationalize(m: Multivector) -> tuple[Multivector, float]:
    """``(conj(M) rev(M conj(M)), R)`` with the real ``R = M conj(M) rev(M conj(M))``.

    ``numerator / R`` is ``M^-1``.
    """
    mm = gp(m, cliff_conj(m))
    mm_rev = reversion(mm)
    rr = gp(mm, mm_rev)
    denom = float(rr.coeffs[0])
    scale = max(1.0, norm(m) ** 4)
    if abs(denom) <= get_tolerances().null_amplitude * scale:
        raise NullAmplitude(f"M conj(M) vanishes for {m!r}")
    rest = rr.coeffs.copy()
    rest[0] = 0.0
    if float(np.max(np.abs(rest), initial=0.0)) > 1e-12 * scale:
        raise OutOfSubspace("rationalized denominator is not scalar")
    return gp(cliff_conj(m), mm_rev), denom
