"""Print the fixed-point power identities of Cl(R^3) with their residuals.

Each row shows the principal value computed by the library, the expected
value and the residual norm. Rows that only hold on a non-principal branch
are also evaluated on that branch.
"""

import math

from mvfunc import BranchIndex, Multivector, norm, pow_mv, sqrt_mv
from mvfunc.algebra import mul_j, pseudoscalar
from mvfunc.expr import format_text

E1, E2, E3 = (Multivector.blade(n, 3) for n in ("e1", "e2", "e3"))
J = pseudoscalar(3)
ONE = Multivector.scalar(1.0, 3)
EHP = Multivector.scalar(math.exp(-math.pi / 2), 3)

ROWS = [
    ("j^j", lambda: pow_mv(J, J), EHP, None),
    ("(je3)^(je3)", lambda: pow_mv(mul_j(E3), mul_j(E3)), EHP, None),
    ("(je1)^(je3)", lambda: pow_mv(mul_j(E1), mul_j(E3)), mul_j(E2), None),
    ("e1^e1", lambda: pow_mv(E1, E1), E1, None),
    ("e1^e2", lambda: pow_mv(E1, E2), ONE, BranchIndex(n=-1, m=1)),
    ("e2^(je3)", lambda: pow_mv(E2, mul_j(E3)), ONE, BranchIndex(n=1, m=-1)),
    ("e1^(1/2)", lambda: sqrt_mv(E1), ((ONE - J) * 0.5) * (E1 + J), None),
    ("(je3)^e3", lambda: pow_mv(mul_j(E3), E3), J, None),
    ("j^e3", lambda: pow_mv(J, E3), mul_j(E3), None),
]


def main() -> None:
    for label, fn, want, branch in ROWS:
        got = fn()
        line = f"{label:12s} = {format_text(got):40s} residual {norm(got - want):.1e}"
        if branch is not None:
            base, expo = _operands(label)
            alt = pow_mv(base, expo, branch=branch)
            line += f"   on {branch}: {norm(alt - want):.1e}"
        print(line)


def _operands(label):
    return {"e1^e2": (E1, E2), "e2^(je3)": (E2, mul_j(E3))}[label]


if __name__ == "__main__":
    main()
