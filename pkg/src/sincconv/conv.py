"""Sinc convolution ``p(x) = int_a^x f(x-t) g(t) dt ~ omega_m(x) F(A_m) V_m g``."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import ConvolutionError
from .matfun import LaplaceSymbol, matfun_apply
from .sincquad import build_A, omega_basis, sample
from .transform import Balanced, GridMode, Interval, SincGrid, make_grid


@dataclass(frozen=True, eq=False)
class ConvApproximant:
    """Coefficients ``c = F(A_m) V_m g`` on a fixed grid; evaluate with :meth:`eval`."""

    grid: SincGrid
    coeffs: np.ndarray
    method_used: str
    diagnostics: dict = field(default_factory=dict)

    @property
    def flag(self) -> str:
        return "zero_coeffs" if not np.any(self.coeffs) else "ok"

    def eval(self, x):
        return omega_basis(self.grid, x) @ self.coeffs

    __call__ = eval


def build_convolution(
    kind,
    interval: Interval,
    d: float,
    n: int,
    F: LaplaceSymbol,
    g: Callable,
    method: str = "auto",
    *,
    mode: GridMode = Balanced(),
    K: int = 256,
    workers: int = 1,
) -> ConvApproximant:
    grid = make_grid(kind, interval, d, n, mode)
    A = build_A(grid).A
    res = matfun_apply(A, F, sample(grid, g), method, K=K, workers=workers)
    coeffs = np.asarray(res.value, dtype=float)
    if not np.all(np.isfinite(coeffs)):
        raise ConvolutionError(
            f"matrix function overflow/underflow: non-finite coefficients ({res.method}, n = {n})"
        )
    coeffs.setflags(write=False)
    diagnostics = {
        "cond_estimate": res.cond_estimate,
        "imag_residue": res.imag_residue,
        "eigenvalue_singularity_min_distance": res.singularity_distance,
        "contour_radius": res.rho,
        "warnings": list(res.warnings),
    }
    if not np.any(coeffs):
        diagnostics["warnings"].append("all coefficients are zero")
    return ConvApproximant(grid, coeffs, res.method, diagnostics)


def max_error(approx: ConvApproximant, reference: Callable, points: int = 200) -> float:
    """Maximum of ``|p~(x_k) - p(x_k)|`` over ``points`` equispaced ``x_k`` including both ends."""
    iv = approx.grid.interval
    x = np.linspace(iv.a, iv.b, points)
    err = np.abs(approx.eval(x) - np.asarray(reference(x), dtype=float))
    return float(np.max(err)) if err.size else math.nan
