"""Spectra of ``I^(-1)_m`` and ``A_m``: positivity of real parts and contraction."""

from __future__ import annotations

import csv
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, TextIO

import numpy as np

from .sincquad import build_A, im1_matrix
from .transform import Interval, TransformKind, make_grid


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    m: int
    kind: str  # "im1", "se" or "de"
    eigenvalues: np.ndarray
    n: Optional[int] = None

    @property
    def spectral_radius(self) -> float:
        return float(np.max(np.abs(self.eigenvalues)))

    @property
    def min_real_part(self) -> float:
        return float(np.min(self.eigenvalues.real))


def spectrum_im1(m: int) -> SpectrumReport:
    """Eigenvalues of the Toeplitz matrix with entries ``delta^(-1)_{i-j}``."""
    if m < 1:
        raise ValueError("m must be positive")
    return SpectrumReport(m, "im1", np.linalg.eigvals(im1_matrix(m)))


def spectrum_A(kind, interval: Interval, d: float, n: int) -> SpectrumReport:
    grid = make_grid(kind, interval, d, n)
    lam = np.linalg.eigvals(build_A(grid).A)
    return SpectrumReport(grid.m, TransformKind.parse(kind).value, lam, n)


def contraction_sweep(kind, interval: Interval, d: float, n_list: Iterable[int], workers: int = 1):
    """One Balanced-grid spectrum per ``n``, ordered as ``sorted(n_list)``."""
    ns = sorted(set(int(n) for n in n_list))
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(lambda n: spectrum_A(kind, interval, d, n), ns))
    return [spectrum_A(kind, interval, d, n) for n in ns]


def _g(x: float) -> str:
    return format(x, ".17g")


def write_eigenvalues_csv(reports: Iterable[SpectrumReport], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", "m", "n", "re", "im"])
    for r in reports:
        for lam in r.eigenvalues:
            w.writerow([r.kind, r.m, "" if r.n is None else r.n, _g(lam.real), _g(lam.imag)])


def write_summary_csv(reports: Iterable[SpectrumReport], out: TextIO) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["kind", "n", "m", "spectral_radius", "min_real_part"])
    for r in reports:
        w.writerow([r.kind, "" if r.n is None else r.n, r.m, _g(r.spectral_radius), _g(r.min_real_part)])
