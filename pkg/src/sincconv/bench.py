"""Benchmark problems on [0, 2], error sweeps and convergence-rate fits."""

from __future__ import annotations

import csv
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, TextIO

import numpy as np
from scipy.linalg import fractional_matrix_power, logm

from . import specfun
from .conv import build_convolution, max_error
from .errors import InsufficientDataError, ParameterError, SincConvError
from .matfun import LaplaceSymbol
from .transform import Interval, TransformKind, step_size

INTERVAL = Interval(0.0, 2.0)
EXAMPLE_IDS = tuple(range(1, 10))
PLATEAU = 1e-13


@dataclass(frozen=True, eq=False)
class ExampleProblem:
    id: int
    g: Callable
    kernel: Callable
    symbol: LaplaceSymbol
    reference: Callable
    d_se: float = 3.14
    d_de: float = 1.57
    expect_convergence_de: bool = True
    interval: Interval = INTERVAL

    def d(self, method) -> float:
        return self.d_se if TransformKind.parse(method) is TransformKind.SE else self.d_de


def _sqrt_g(t):
    return np.sqrt(t)


def _ref2(x):
    x = np.asarray(x, dtype=float)
    r = np.sqrt(2.0 * x)
    return (
        (x + 1) / math.sqrt(2) * (np.arctan(r + 1) + np.arctan(r - 1))
        + (x - 1) / (2 * math.sqrt(2)) * np.log((x - r + 1) / (x + r + 1))
        - 2 * np.sqrt(x)
    )


def _ref5(x):
    x = np.asarray(x, dtype=float)
    z = np.sqrt(2 * x / math.pi)
    return math.sqrt(math.pi / 2) * (specfun.fresnel_c(z) * np.sin(x) - specfun.fresnel_s(z) * np.cos(x))


def _ref6(x):
    x = np.asarray(x, dtype=float)
    z = np.sqrt(2 * x / math.pi)
    C, S = specfun.fresnel_c(z), specfun.fresnel_s(z)
    return math.sqrt(2 * math.pi) * (S * np.cos(x) - C * np.sin(x)) + math.pi * np.sqrt(x) * (S**2 + C**2)


def _ref7(x):
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        y = 2.0 / 9.0 * x**1.5 * (-8 + 3 * np.log(4 * x))
    return np.where(x > 0, y, 0.0)


def _ref9(x):
    x = np.asarray(x, dtype=float)
    return 2.0 / 3.0 * np.maximum(x - 1, 0.0) ** 1.5 * specfun.heaviside(x - 1)


def _log_symbol(s):
    s = np.asarray(s, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        y = s * (-specfun.EULER_GAMMA + np.log(s))
    return np.where(s == 0, 0.0, y)


def _log_matrix(A):
    return A @ (logm(A) - specfun.EULER_GAMMA * np.eye(A.shape[0]))


def _pow_matrix(A):
    return A @ fractional_matrix_power(A, 1.0 / 3.0)


def _pow_symbol(s):
    return np.power(np.asarray(s, dtype=complex), 4.0 / 3.0)


def _delay_symbol(s):
    s = np.asarray(s, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        y = s * np.exp(-1.0 / s)
    return np.where(s == 0, 0.0, y)


def _sinc_kernel(v):
    return np.sinc(np.asarray(v, dtype=float) / math.pi)


_GAMMA_4_3 = specfun.gamma_fn(4.0 / 3.0)

_EXAMPLES = {
    1: dict(
        g=_sqrt_g,
        kernel=lambda v: v,
        symbol=LaplaceSymbol(lambda s: s**2, name="s^2"),
        reference=lambda x: 4.0 / 15.0 * np.asarray(x, dtype=float) ** 2.5,
    ),
    2: dict(
        g=lambda t: np.sqrt(t) / (1 + t**2),
        kernel=lambda v: v,
        symbol=LaplaceSymbol(lambda s: s**2, name="s^2"),
        reference=_ref2,
        d_se=2.35,
        d_de=0.833,
    ),
    3: dict(
        g=_sqrt_g,
        kernel=lambda v: specfun.bessel_j0(2 * np.sqrt(v)),
        symbol=LaplaceSymbol(lambda s: s * np.exp(-s), name="s exp(-s)"),
        reference=lambda x: 0.25 * (np.sin(2 * np.sqrt(x)) - 2 * np.sqrt(x) * np.cos(2 * np.sqrt(x))),
    ),
    4: dict(
        g=_sqrt_g,
        kernel=np.exp,
        symbol=LaplaceSymbol(lambda s: s / (1 - s), (1.0,), 0.99, name="s/(1-s)"),
        reference=lambda x: math.sqrt(math.pi) / 2 * np.exp(x) * specfun.erf(np.sqrt(x)) - np.sqrt(x),
    ),
    5: dict(
        g=_sqrt_g,
        kernel=np.cos,
        symbol=LaplaceSymbol(lambda s: s / (1 + s**2), (1j, -1j), 0.99, name="s/(1+s^2)"),
        reference=_ref5,
    ),
    6: dict(
        g=_sqrt_g,
        kernel=_sinc_kernel,
        symbol=LaplaceSymbol(np.arctan, (1j, -1j), 0.99, name="arctan(s)"),
        reference=_ref6,
    ),
    7: dict(
        g=_sqrt_g,
        kernel=np.log,
        symbol=LaplaceSymbol(_log_symbol, (0.0,), 0.0, name="s(-gamma+log s)", matrix_eval=_log_matrix),
        reference=_ref7,
    ),
    8: dict(
        g=_sqrt_g,
        kernel=lambda v: np.cbrt(v) / _GAMMA_4_3,
        symbol=LaplaceSymbol(_pow_symbol, (0.0,), 0.0, name="s^(4/3)", matrix_eval=_pow_matrix),
        reference=lambda x: specfun.EXAMPLE8_CONSTANT * np.asarray(x, dtype=float) ** (11.0 / 6.0),
    ),
    9: dict(
        g=_sqrt_g,
        kernel=lambda v: specfun.heaviside(np.asarray(v) - 1),
        symbol=LaplaceSymbol(_delay_symbol, (0.0,), 0.0, name="s exp(-1/s)"),
        reference=_ref9,
        expect_convergence_de=False,
    ),
}


def example(id: int) -> ExampleProblem:
    if id not in _EXAMPLES:
        raise ParameterError(f"example id must be in 1..9, got {id!r}")
    return ExampleProblem(id=id, **_EXAMPLES[id])


@dataclass(frozen=True)
class SweepRecord:
    example_id: int
    method: str
    n: int
    m: int
    h: float
    max_error: float
    build_seconds: float
    eval_seconds: float
    flag: str
    diagnostics: str = ""


def run_one(
    id: int,
    method,
    n: int,
    d: Optional[float] = None,
    matfun_method: str = "auto",
) -> SweepRecord:
    """Build, evaluate and score a single (example, method, n) triple; never raises on numerical failure."""
    prob = example(id)
    kind = TransformKind.parse(method)
    d = prob.d(kind) if d is None else d
    h = step_size(kind, d, n)
    t0 = time.perf_counter()
    try:
        approx = build_convolution(kind, prob.interval, d, n, prob.symbol, prob.g, matfun_method)
    except SincConvError as exc:
        return SweepRecord(id, kind.value, n, 2 * n + 1, h, math.nan, time.perf_counter() - t0, 0.0, "nonfinite", str(exc))
    t1 = time.perf_counter()
    err = max_error(approx, prob.reference)
    t2 = time.perf_counter()
    diag = "; ".join([approx.method_used] + approx.diagnostics["warnings"])
    return SweepRecord(id, kind.value, n, approx.grid.m, approx.grid.h, err, t1 - t0, t2 - t1, approx.flag, diag)


def run_sweep(
    ids: Iterable[int],
    methods: Iterable,
    n_list: Iterable[int],
    *,
    d_overrides: Optional[dict] = None,
    matfun_method: str = "auto",
    workers: int = 1,
) -> list[SweepRecord]:
    """One record per (id, method, n), sorted by that key.

    ``d_overrides`` maps ``"se"``/``"de"`` to a strip half-width replacing the
    per-example default.
    """
    d_overrides = d_overrides or {}
    jobs = sorted(
        {(int(i), TransformKind.parse(m).value, int(n)) for i in ids for m in methods for n in n_list}
    )
    for i, _, _ in jobs:
        example(i)

    def job(key):
        i, m, n = key
        return run_one(i, m, n, d_overrides.get(m), matfun_method)

    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            records = list(pool.map(job, jobs))
    else:
        records = [job(k) for k in jobs]
    return sorted(records, key=lambda r: (r.example_id, r.method, r.n))


@dataclass(frozen=True)
class RateFit:
    c: float
    C: float
    points_used: int


def _abscissa(model: str, records: Sequence[SweepRecord]) -> np.ndarray:
    n = np.array([r.n for r in records], dtype=float)
    if model == "SE_root_exp":
        return np.sqrt(n)
    if model == "DE_milog":
        # balanced DE step h = log(2dn)/n, hence n / log(2dn) = 1/h
        return 1.0 / np.array([r.h for r in records])
    raise ParameterError(f"unknown rate model {model!r}")


def fit_rate(records: Sequence[SweepRecord], model: str, plateau: float = PLATEAU) -> RateFit:
    """Least-squares fit ``log(err) = log C - c * s`` with ``s = sqrt(n)`` or ``n/log(2dn)``.

    Records below ``plateau`` (or non-finite) are ignored, and the smallest
    remaining ``n`` is dropped as pre-asymptotic.
    """
    usable = sorted(
        (r for r in records if math.isfinite(r.max_error) and r.max_error >= plateau),
        key=lambda r: r.n,
    )
    if len(usable) < 4:
        raise InsufficientDataError(f"need at least 4 records above {plateau:g}, got {len(usable)}")
    usable = usable[1:]
    s = _abscissa(model, usable)
    y = np.log([r.max_error for r in usable])
    slope, intercept = np.polyfit(s, y, 1)
    return RateFit(float(-slope), float(math.exp(intercept)), len(usable))


CSV_HEADER = ["example", "method", "n", "m", "h", "max_error", "build_seconds", "eval_seconds", "flag"]


def write_csv(records: Iterable[SweepRecord], out: TextIO, timings: bool = True) -> None:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(CSV_HEADER)
    g = lambda x: format(x, ".17g")
    for r in records:
        bs, es = (r.build_seconds, r.eval_seconds) if timings else (0.0, 0.0)
        w.writerow([r.example_id, r.method, r.n, r.m, g(r.h), g(r.max_error), g(bs), g(es), r.flag])
