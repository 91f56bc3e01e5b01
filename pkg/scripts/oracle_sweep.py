"""Compare closed-form exp/log/sqrt against the matrix and series oracles.

Usage: python3 scripts/oracle_sweep.py [--samples N] [--seed S] [--dims 2 3]
"""

import argparse

import numpy as np

from mvfunc import Multivector, exp, log, norm, sqrt_mv
from mvfunc.errors import CliffordError
from mvfunc.oracle import mat_fn, principal_consistent, series_eval

FUNCS = {"exp": exp, "log": log, "sqrt": sqrt_mv}


def sweep(dim: int, samples: int, rng: np.random.Generator) -> dict[str, float]:
    worst = {f"{name}/matrix": 0.0 for name in FUNCS}
    worst["exp/series"] = 0.0
    for _ in range(samples):
        m = Multivector(dim, rng.uniform(-2, 2, size=1 << dim))
        if not principal_consistent(m):
            continue
        for name, fn in FUNCS.items():
            try:
                got = fn(m)
            except CliffordError:
                continue
            want = mat_fn(name, m)
            worst[f"{name}/matrix"] = max(worst[f"{name}/matrix"], norm(got - want) / max(1.0, norm(want)))
        want = series_eval("exp", m, 40)
        worst["exp/series"] = max(worst["exp/series"], norm(exp(m) - want) / max(1.0, norm(want)))
    return worst


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 3])
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    over = 0
    for dim in args.dims:
        for key, val in sweep(dim, args.samples, rng).items():
            flag = "" if val <= 1e-8 else "  <-- above 1e-8"
            over += bool(flag)
            print(f"dim {dim}  {key:12s} max rel diff {val:.2e}{flag}")
    raise SystemExit(1 if over else 0)


if __name__ == "__main__":
    main()
