"""Example 9 with the DE transformation, evaluated in extended precision.

The symbol s exp(-1/s) is applied through an eigendecomposition of A_m in
mpmath arithmetic, so the result is the exact discrete approximant up to the
rounding of A_m itself.  Comparing it with the double-precision pipeline shows
whether the observed errors belong to the formula or to the arithmetic.
"""

import dataclasses

import mpmath
import numpy as np
from _config import parse_config

from sincconv.bench import example, run_one
from sincconv.sincquad import build_A, omega_basis, sample
from sincconv.transform import make_grid


@dataclasses.dataclass(frozen=True)
class HighPrecisionConfig:
    n_values: tuple = (4, 8, 12, 16, 25)
    digits: int = 150
    d: float = 1.57


def exact_error(n, d, digits):
    mpmath.mp.dps = digits
    prob = example(9)
    grid = make_grid("de", prob.interval, d, n)
    A = mpmath.matrix(np.asarray(build_A(grid).A).tolist())
    lam, X = mpmath.eig(A)
    y = mpmath.lu_solve(X, mpmath.matrix(sample(grid, prob.g).tolist()))
    Fy = mpmath.matrix([(z * mpmath.exp(-1 / z) if z != 0 else 0) * y[i] for i, z in enumerate(lam)])
    c = np.array([float(mpmath.re(ci)) for ci in X * Fy])
    x = np.linspace(0, 2, 200)
    err = float(np.max(np.abs(omega_basis(grid, x) @ c - prob.reference(x))))
    return err, float(np.max(np.abs(c))), min(float(mpmath.re(z)) for z in lam)


def main(cfg: HighPrecisionConfig) -> None:
    print(f"{'n':>4} {'m':>4} {'exact error':>12} {'double error':>12} {'max|c|':>10} {'min Re lam':>11}")
    for n in cfg.n_values:
        err, cmax, re_min = exact_error(n, cfg.d, cfg.digits)
        dbl = run_one(9, "de", n, d=cfg.d)
        print(f"{n:4d} {2 * n + 1:4d} {err:12.4g} {dbl.max_error:12.4g} {cmax:10.3g} {re_min:11.3g}")


if __name__ == "__main__":
    main(parse_config(HighPrecisionConfig))
