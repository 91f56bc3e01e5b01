"""Exception hierarchy."""


class CliffordError(ArithmeticError):
    """Base class for all numerical errors raised by mvfunc."""


class DimensionError(ValueError):
    """Operands of different dimension, or an operation unsupported in a dimension."""


class NonFiniteError(ValueError):
    """A coefficient is NaN or infinite."""


class NullAmplitude(CliffordError):
    """``M * conj(M)`` vanishes, so M has no inverse (or no polar form)."""


class ZeroF(CliffordError):
    """``|F| = 0`` so the unit direction ``F / |F|`` is undefined."""


class ZeroFNoCentral(ZeroF):
    """A 2D negative real has no principal logarithm."""


class NonRealAmplitude2D(CliffordError):
    """A 2D multivector whose amplitude is bivector valued (``v**2 > a**2 + b**2``)."""


class NoPrincipalBranch(CliffordError):
    """The 2D function exists only off the real line (no principal choice)."""


class ZeroDenominator(CliffordError):
    """A square-root denominator ``M + conj(M) +/- 2|M|`` vanishes."""


class NonScalarRadicand(CliffordError):
    """The 4D amplitude radicand has a non-scalar part (indicates a bug)."""


class NotInSubalgebra(CliffordError):
    """A 1D computation left the Cl(1) subalgebra."""


class NonUnitRotor(CliffordError):
    """``R * rev(R)`` is not 1."""


class NonUnitVector(CliffordError):
    """A vector argument was expected to be unit length."""


class OutOfSubspace(CliffordError):
    """An argument has grades outside the expected subspace."""


class DivergentSeries(CliffordError):
    """A power series was requested outside its radius of convergence."""


class BranchMismatchWarning(RuntimeWarning):
    """Matrix eigenvalues lie on or straddle a principal branch cut."""
