"""Fitted convergence slopes against their theoretical values.

Covers the indefinite-integration rates for g(t) = sqrt(t)(2 - t) and the
convolution rates of Example 1, with both the SE and DE transformations.
"""

import dataclasses
import math

import numpy as np
from _config import parse_config

from sincconv.bench import SweepRecord, fit_rate, run_sweep
from sincconv.sincquad import apply_indef, build_A
from sincconv.transform import Interval, make_grid


@dataclasses.dataclass(frozen=True)
class RateConfig:
    d_se: float = 3.14
    d_de: float = 1.57
    se_n_max: int = 80
    de_n_max: int = 45
    tolerance: float = 0.25


def indefinite_records(kind, d, ns):
    iv = Interval(0.0, 2.0)
    x = np.linspace(0, 2, 200)
    exact = 4 / 3 * x**1.5 - 0.4 * x**2.5
    recs = []
    for n in ns:
        grid = make_grid(kind, iv, d, n)
        y = apply_indef(build_A(grid), lambda t: np.sqrt(t) * (2 - t), x)
        recs.append(SweepRecord(0, kind, n, grid.m, grid.h, float(np.max(np.abs(y - exact))), 0, 0, "ok"))
    return recs


def report(label, fit, target, tol):
    rel = (fit.c - target) / target
    verdict = "within" if abs(rel) <= tol else "outside"
    print(f"{label:<34} c = {fit.c:7.4f}  theory {target:7.4f}  ({rel:+.1%}, {verdict} {tol:.0%})")


def main(cfg: RateConfig) -> None:
    se_t, de_t = math.sqrt(math.pi * cfg.d_se), math.pi * cfg.d_de
    fit = fit_rate(indefinite_records("se", cfg.d_se, [4, 9, 16, 25, 36, 49]), "SE_root_exp")
    report("indefinite integration, SE", fit, se_t, cfg.tolerance)
    fit = fit_rate(indefinite_records("de", cfg.d_de, range(4, 65)), "DE_milog")
    report("indefinite integration, DE", fit, de_t, cfg.tolerance)
    fit = fit_rate(run_sweep([1], ["se"], range(9, cfg.se_n_max + 1), d_overrides={"se": cfg.d_se}), "SE_root_exp")
    report("Example 1 convolution, SE", fit, se_t, cfg.tolerance)
    fit = fit_rate(run_sweep([1], ["de"], range(5, cfg.de_n_max + 1), d_overrides={"de": cfg.d_de}), "DE_milog")
    report("Example 1 convolution, DE", fit, de_t, cfg.tolerance)
    for i in (7, 8, 9):
        fit = fit_rate(run_sweep([i], ["se"], range(8, cfg.se_n_max + 1)), "SE_root_exp")
        report(f"Example {i} convolution, SE", fit, se_t, cfg.tolerance)


if __name__ == "__main__":
    main(parse_config(RateConfig))
