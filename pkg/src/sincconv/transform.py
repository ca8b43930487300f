"""SE/DE variable transformations and Sinc grid construction.

Both maps send the real line onto ``(a, b)``:

* SE: ``psi(u) = (b-a)/2 tanh(u/2) + (b+a)/2``
* DE: ``psi(u) = (b-a)/2 tanh(pi/2 sinh u) + (b+a)/2``

Writing ``v = u`` (SE) or ``v = pi sinh u`` (DE), the distances to the
endpoints are ``psi(u) - a = (b-a) expit(v)`` and ``b - psi(u) = (b-a) expit(-v)``.
Grids keep both gaps so that nodes which round onto an endpoint in floating
point still carry their exact distance to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Union

import numpy as np
from scipy.special import expit

from .errors import DomainError, ParameterError


class TransformKind(str, Enum):
    SE = "se"
    DE = "de"

    @classmethod
    def parse(cls, value: "TransformKind | str") -> "TransformKind":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ParameterError(f"unknown transform kind {value!r}") from None


@dataclass(frozen=True)
class Interval:
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ParameterError("interval endpoints must be finite")
        if not self.a < self.b:
            raise ParameterError(f"need a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> float:
        return self.b - self.a

    def check(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if np.any(~((x >= self.a) & (x <= self.b))):
            bad = x[~((x >= self.a) & (x <= self.b))].ravel()[0]
            raise DomainError(f"x = {bad!r} outside [{self.a}, {self.b}]")
        return x


@dataclass(frozen=True)
class Balanced:
    """``M = N = n`` with the balanced step sizes for SE and DE."""


@dataclass(frozen=True)
class Weighted:
    """Endpoint-weighted truncation for ``|g| <= K |z-a|^(alpha-1) |b-z|^(beta-1)``."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise ParameterError("alpha and beta must be positive")

    @property
    def mu(self) -> float:
        return min(self.alpha, self.beta)


GridMode = Union[Balanced, Weighted]


def _exponent(kind: TransformKind, u):
    if kind is TransformKind.SE:
        return u
    with np.errstate(over="ignore"):
        return np.pi * np.sinh(u)


def endpoint_gaps(kind, interval: Interval, u):
    """Return ``(psi(u) - a, b - psi(u))`` without cancellation."""
    kind = TransformKind.parse(kind)
    v = _exponent(kind, np.asarray(u, dtype=float))
    return interval.length * expit(v), interval.length * expit(-v)


def psi(kind, interval: Interval, u):
    """Map ``u`` in R to ``t`` in ``(a, b)``."""
    u = np.asarray(u, dtype=float)
    left, right = endpoint_gaps(kind, interval, u)
    t = np.where(u <= 0, interval.a + left, interval.b - right)
    return t.item() if t.ndim == 0 else t


def psi_prime(kind, interval: Interval, u):
    """Derivative of :func:`psi`; underflows to 0 for large ``|u|``."""
    kind = TransformKind.parse(kind)
    u = np.asarray(u, dtype=float)
    v = _exponent(kind, u)
    # sech^2(v/2) / 4 == expit(v) * expit(-v)
    w = interval.length * expit(v) * expit(-v)
    if kind is TransformKind.DE:
        with np.errstate(over="ignore", invalid="ignore"):
            w = np.where(w == 0.0, 0.0, np.pi * np.cosh(u) * w)
    return w.item() if w.ndim == 0 else w


def phi(kind, interval: Interval, x):
    """Inverse of :func:`psi`; returns -inf at ``x = a`` and +inf at ``x = b``."""
    kind = TransformKind.parse(kind)
    x = interval.check(x)
    with np.errstate(divide="ignore"):
        ell = np.log((x - interval.a) / (interval.b - x))
    u = ell if kind is TransformKind.SE else np.arcsinh(ell / np.pi)
    return u.item() if u.ndim == 0 else u


@dataclass(frozen=True, eq=False)
class SincGrid:
    """Sinc points ``psi(jh)``, ``j = -M..N``, together with ``psi'(jh)``.

    Index ``j`` of the logical range ``-M..N`` sits at array position ``j + M``.
    """

    kind: TransformKind
    interval: Interval
    d: float
    n: int
    h: float
    M: int
    N: int
    mode: GridMode = field(default_factory=Balanced)
    points: np.ndarray = field(init=False, repr=False)
    nodes: np.ndarray = field(init=False, repr=False)
    weights: np.ndarray = field(init=False, repr=False)
    left_gaps: np.ndarray = field(init=False, repr=False)
    right_gaps: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        u = np.arange(-self.M, self.N + 1) * self.h
        left, right = endpoint_gaps(self.kind, self.interval, u)
        for name, value in [
            ("points", u),
            ("nodes", np.asarray(psi(self.kind, self.interval, u))),
            ("weights", np.asarray(psi_prime(self.kind, self.interval, u))),
            ("left_gaps", left),
            ("right_gaps", right),
        ]:
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def m(self) -> int:
        return self.M + self.N + 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(-self.M, self.N + 1)


def step_size(kind, d: float, n: int, mode: GridMode = Balanced()) -> float:
    kind = TransformKind.parse(kind)
    mu = 1.0 if isinstance(mode, Balanced) else mode.mu
    if kind is TransformKind.SE:
        return math.sqrt(math.pi * d / (mu * n))
    return math.log(2.0 * d * n / mu) / n


def make_grid(kind, interval: Interval, d: float, n: int, mode: GridMode = Balanced()) -> SincGrid:
    """Build the grid for strip half-width ``d`` and size parameter ``n``.

    Balanced mode uses ``h = sqrt(pi d / n)`` (SE) or ``h = log(2 d n) / n``
    (DE) with ``M = N = n``.  Weighted mode uses ``mu = min(alpha, beta)`` in
    the step and enlarges or shrinks one side of the truncation accordingly.
    """
    kind = TransformKind.parse(kind)
    if int(n) != n or n < 1:
        raise ParameterError(f"n must be a positive integer, got {n!r}")
    n = int(n)
    dmax = math.pi if kind is TransformKind.SE else math.pi / 2
    if not (0.0 < d < dmax):
        raise ParameterError(f"{kind.name} requires 0 < d < {dmax:.6g}, got d = {d!r}")
    mu = 1.0 if isinstance(mode, Balanced) else mode.mu
    if kind is TransformKind.DE and 2.0 * d * n / mu <= 1.0:
        raise ParameterError(f"DE step size is not positive for d = {d}, n = {n}")

    h = step_size(kind, d, n, mode)
    if isinstance(mode, Balanced):
        M = N = n
    elif kind is TransformKind.SE:
        if mode.alpha <= mode.beta:
            M, N = n, math.ceil(mode.alpha / mode.beta * n)
        else:
            M, N = math.ceil(mode.beta / mode.alpha * n), n
    else:
        if mode.alpha <= mode.beta:
            M, N = n, n - math.floor(math.log(mode.beta / mode.alpha) / h)
        else:
            M, N = n - math.floor(math.log(mode.alpha / mode.beta) / h), n
        M, N = max(M, 1), max(N, 1)
    return SincGrid(kind, interval, float(d), n, h, M, N, mode)
