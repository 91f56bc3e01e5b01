"""Numerical tolerances shared by the library.

Tolerances live in a :mod:`contextvars` variable so a thread (or an asyncio
task) can override them locally without touching other threads.

    >>> with tolerances(null_amplitude=1e-9):
    ...     pass
"""

from __future__ import annotations

import contextlib
import dataclasses
import os
from contextvars import ContextVar


@dataclasses.dataclass(frozen=True)
class Tolerances:
    """Thresholds used by the numerical kernels.

    Attributes:
        null_amplitude: relative threshold under which ``M * conj(M)`` is
            treated as zero (scaled by ``max(1, norm(M)**2)``).
        series_switch: below this modulus of ``|F|**2`` the even/odd power
            series kernels are used instead of the closed forms.
        roundtrip: relative tolerance for recomposition/roundtrip checks.
        unit: tolerance for "is unit" / "is orthonormal" precondition checks.
    """

    null_amplitude: float = 1e-12
    series_switch: float = 1e-4
    roundtrip: float = 1e-9
    unit: float = 1e-9

    def replace(self, **changes) -> "Tolerances":
        return dataclasses.replace(self, **changes)


def _from_env() -> Tolerances:
    raw = os.environ.get("GA_TOL")
    if raw is None:
        return Tolerances()
    return Tolerances(null_amplitude=float(raw))


_current: ContextVar[Tolerances] = ContextVar("mvfunc_tolerances", default=_from_env())


def get_tolerances() -> Tolerances:
    return _current.get()


@contextlib.contextmanager
def tolerances(**changes):
    """Temporarily override some tolerances in the current context."""
    token = _current.set(_current.get().replace(**changes))
    try:
        yield _current.get()
    finally:
        _current.reset(token)
