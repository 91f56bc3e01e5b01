"""Elementary functions of Clifford multivectors in one to four dimensions."""

__version__ = "0.1.0"

from .algebra import (
    CenterComplex,
    GradePart,
    Multivector,
    SplitScalar,
    add,
    amplitude,
    amplitude4,
    cliff_conj,
    construct,
    geometric_series,
    gp,
    grade,
    inner,
    inverse,
    inverse4,
    norm,
    reversion,
    sharp,
    space_inversion,
    sub,
    vector_quotient,
)
from .config import Tolerances, get_tolerances, tolerances

from .elementary import (
    BranchIndex,
    FSplit,
    PolarForm,
    arg,
    exp,
    f_invariants,
    log,
    log_base,
    log_branches,
    log_two_vectors,
    polar,
    pow_center,
    pow_int,
    pow_mv,
    pow_real,
    root_minus_one_3d,
    scalar_roots,
    split,
    sqrt_mv,
)
from .linear import LinearTermList, linear_apply, rationalize, reflect, rotate3, rotate4, sylvester_solve
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
    tanh_mv,
)

__all__ = [
    "CenterComplex",
    "GradePart",
    "Multivector",
    "SplitScalar",
    "add",
    "amplitude",
    "amplitude4",
    "cliff_conj",
    "construct",
    "geometric_series",
    "gp",
    "grade",
    "inner",
    "inverse",
    "inverse4",
    "norm",
    "reversion",
    "sharp",
    "space_inversion",
    "sub",
    "vector_quotient",
    "BranchIndex",
    "FSplit",
    "PolarForm",
    "arg",
    "exp",
    "f_invariants",
    "log",
    "log_base",
    "log_branches",
    "log_two_vectors",
    "polar",
    "pow_center",
    "pow_int",
    "pow_mv",
    "pow_real",
    "root_minus_one_3d",
    "scalar_roots",
    "split",
    "sqrt_mv",
    "arccos_mv",
    "arccosh_mv",
    "arcsin_mv",
    "arcsinh_mv",
    "arctan_mv",
    "arctanh_mv",
    "cos_mv",
    "cosh_mv",
    "sin_mv",
    "sinh_mv",
    "sinh_zeros",
    "tan_mv",
    "tanh_mv",
    "Tolerances",
    "get_tolerances",
    "tolerances",
    "LinearTermList",
    "linear_apply",
    "rationalize",
    "reflect",
    "rotate3",
    "rotate4",
    "sylvester_solve",
]
