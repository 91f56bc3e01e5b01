"""Independent verification backends.

Two routes that share no code with the closed forms in :mod:`mvfunc.elementary`:

* matrix representations ``Cl(R^2) ~ Mat(2, R)`` and ``Cl(R^3) ~ Mat(2, C)``,
  with matrix functions computed from the 2x2 eigendecomposition;
* truncated Taylor series evaluated by repeated geometric products.

Basis images. Dim 2: ``e1 -> diag(1, -1)``, ``e2 -> [[0, 1], [1, 0]]``.
Dim 3: ``e_k -> sigma_k`` (Pauli matrices), hence ``j = e123 -> 1j * I``.
Dim 1 multivectors are represented through their dim-2 embedding.
"""

from __future__ import annotations

import cmath
import math
import warnings
from functools import lru_cache
from typing import Callable

import numpy as np
import scipy.linalg

from .algebra import Multivector, blade_names, lift, norm, project, right_mul_matrix
from .errors import BranchMismatchWarning, DimensionError, DivergentSeries

_I2 = np.eye(2)
_E1_2 = np.array([[1.0, 0.0], [0.0, -1.0]])
_E2_2 = np.array([[0.0, 1.0], [1.0, 0.0]])

_SIGMA = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def _basis_images(dim: int) -> list[np.ndarray]:
    gens = {2: [_E1_2, _E2_2], 3: _SIGMA}[dim]
    dtype = float if dim == 2 else complex
    images = []
    for name in blade_names(dim):
        mat = np.eye(2, dtype=dtype)
        if name != "1":
            for ch in name[1:]:
                mat = mat @ gens[int(ch) - 1]
        images.append(mat)
    return images


_IMAGES = {2: _basis_images(2), 3: _basis_images(3)}


def rep2(m: Multivector) -> np.ndarray:
    """Real 2x2 matrix of a dim-2 (or dim-1) multivector."""
    if m.dim == 1:
        m = lift(m, 2)
    if m.dim != 2:
        raise DimensionError("rep2 needs dim 1 or 2")
    return sum(c * img for c, img in zip(m.coeffs, _IMAGES[2]))


def unrep2(a: np.ndarray) -> Multivector:
    a = np.asarray(a, dtype=float)
    return Multivector(2, [
        (a[0, 0] + a[1, 1]) / 2,
        (a[0, 0] - a[1, 1]) / 2,
        (a[0, 1] + a[1, 0]) / 2,
        (a[0, 1] - a[1, 0]) / 2,
    ])


def rep3(m: Multivector) -> np.ndarray:
    """Complex 2x2 matrix of a dim-3 multivector."""
    if m.dim != 3:
        raise DimensionError("rep3 needs dim 3")
    return sum(c * img for c, img in zip(m.coeffs, _IMAGES[3]))


def unrep3(a: np.ndarray) -> Multivector:
    a = np.asarray(a, dtype=complex)
    z = np.trace(a) / 2
    # coefficient of sigma_k is v_k + 1j * w_k, with j w_k living on the dual bivector
    ck = [np.trace(s @ a) / 2 for s in _SIGMA]
    return Multivector(3, [
        z.real, ck[0].real, ck[1].real, ck[2].real,
        ck[2].imag, ck[1].imag, ck[0].imag, z.imag,
    ])


def rep(m: Multivector) -> np.ndarray:
    return rep3(m) if m.dim == 3 else rep2(m)


def unrep(a: np.ndarray, dim: int) -> Multivector:
    if dim == 3:
        return unrep3(a)
    if dim == 2:
        if np.iscomplexobj(a):
            imag = float(np.max(np.abs(np.imag(a))))
            if imag > 1e-9 * max(1.0, float(np.max(np.abs(a)))):
                warnings.warn(f"real representation has imaginary residue {imag:.2e}",
                              BranchMismatchWarning, stacklevel=2)
            a = np.real(a)
        return unrep2(a)
    if dim == 1:
        return project(unrep(a, 2), 1, tol=1e-9)
    raise DimensionError(f"no matrix representation for dim {dim}")


# ---------------------------------------------------------------------------
# Power series
# ---------------------------------------------------------------------------

def series_eval(kind: str, m: Multivector, terms: int = 40) -> Multivector:
    """Truncated Taylor series by repeated geometric products.

    ``kind`` is one of exp, cos, sin, cosh, sinh, log1p (``log(1 + M)``) and
    sqrt1p (``(1 + M)**0.5``). The last two need ``norm(M) < 1``.
    """
    dim = m.dim
    if kind in ("log1p", "sqrt1p") and norm(m) >= 1.0:
        raise DivergentSeries(f"{kind} series needs norm(M) < 1, got {norm(m):.3g}")
    n = 1 << dim
    right = right_mul_matrix(m)
    total = np.zeros(n)
    power = np.eye(n)[0]  # M**k
    for coef in _series_coefs(kind, terms):
        if coef:
            total += coef * power
        power = right @ power
    return Multivector(dim, total)


@lru_cache(maxsize=None)
def _series_coefs(kind: str, terms: int) -> tuple[float, ...]:
    return tuple(_series_coef(kind, k) for k in range(terms))


def _series_coef(kind: str, k: int) -> float:
    if kind == "exp":
        return 1.0 / math.factorial(k)
    if kind in ("cosh", "cos"):
        if k % 2:
            return 0.0
        sign = (-1) ** (k // 2) if kind == "cos" else 1
        return sign / math.factorial(k)
    if kind in ("sinh", "sin"):
        if k % 2 == 0:
            return 0.0
        sign = (-1) ** (k // 2) if kind == "sin" else 1
        return sign / math.factorial(k)
    if kind == "log1p":
        return 0.0 if k == 0 else (-1) ** (k + 1) / k
    if kind == "sqrt1p":
        # generalized binomial coefficient C(1/2, k)
        c = 1.0
        for i in range(k):
            c *= (0.5 - i) / (i + 1)
        return c
    raise ValueError(f"unknown series kind {kind!r}")


# ---------------------------------------------------------------------------
# Matrix functions
# ---------------------------------------------------------------------------

def _scalar_fn(kind: str) -> tuple[Callable[[complex], complex], Callable[[np.ndarray], np.ndarray]]:
    def csqrt(z):
        return cmath.sqrt(complex(z.real + 0.0, z.imag + 0.0))

    def clog(z):
        return cmath.log(complex(z.real + 0.0, z.imag + 0.0))

    table = {
        "exp": (cmath.exp, scipy.linalg.expm),
        "sqrt": (csqrt, scipy.linalg.sqrtm),
        "log": (clog, scipy.linalg.logm),
    }
    if kind not in table:
        raise ValueError(f"unknown matrix function {kind!r}")
    return table[kind]


def eigenvalues(a: np.ndarray) -> tuple[complex, complex]:
    """Roots of the 2x2 characteristic polynomial ``x^2 - tr x + det``."""
    tr = complex(a[0, 0] + a[1, 1])
    det = complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])
    disc = cmath.sqrt(tr * tr / 4 - det)
    return tr / 2 + disc, tr / 2 - disc


def on_branch_cut(lams, tol: float = 1e-12) -> bool:
    """True if an eigenvalue lies on the closed negative real axis."""
    for lam in lams:
        scale = max(1.0, abs(lam))
        if lam.real <= tol * scale and abs(lam.imag) <= tol * scale:
            return True
    return False


def matfn2x2(kind: str, a: np.ndarray) -> np.ndarray:
    """Primary matrix function of a 2x2 matrix via its eigenvalues.

    Uses the Lagrange-Sylvester form ``f(A) = [f(l1)(A - l2) - f(l2)(A - l1)] / (l1 - l2)``;
    near-repeated eigenvalues fall back to scipy's Schur-based routines.
    """
    f, fallback = _scalar_fn(kind)
    a = np.asarray(a, dtype=complex)
    l1, l2 = eigenvalues(a)
    if kind in ("log", "sqrt") and on_branch_cut((l1, l2)):
        warnings.warn(f"eigenvalues {l1:.3g}, {l2:.3g} on the branch cut of {kind}",
                      BranchMismatchWarning, stacklevel=2)
    gap = abs(l1 - l2)
    if gap <= 1e-6 * max(1.0, abs(l1), abs(l2)):
        return np.asarray(fallback(a), dtype=complex)
    eye = np.eye(2)
    return (f(l1) * (a - l2 * eye) - f(l2) * (a - l1 * eye)) / (l1 - l2)


def mat_fn(kind: str, m: Multivector) -> Multivector:
    """``unrep(f(rep(M)))`` for ``f`` in exp, sqrt, log.

    Emits :class:`BranchMismatchWarning` when an eigenvalue sits on the
    principal branch cut (log, sqrt) or when a real representation would need
    a complex result.
    """
    if m.dim not in (1, 2, 3):
        raise DimensionError("mat_fn supports dims 1-3")
    return unrep(matfn2x2(kind, rep(m)), m.dim)


def principal_consistent(m: Multivector, margin: float = 1e-6) -> bool:
    """Whether the amplitude ``sqrt(M conj(M))`` is the product of the principal
    roots of the representation eigenvalues.

    On this set (eigenvalues off the negative real axis and
    ``|arg l1 + arg l2| < pi``) the closed-form log and square root coincide
    with the principal matrix log and square root.
    """
    lams = eigenvalues(rep(m))
    if on_branch_cut(lams, tol=margin):
        return False
    total = sum(cmath.phase(lam) for lam in lams)
    return abs(total) < math.pi - margin
