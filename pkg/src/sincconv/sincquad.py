"""Sinc indefinite integration on a finite interval.

Two forms approximate ``(J g)(x) = int_a^x g(t) dt``:

* the original form ``sum_j g(t_j) psi'(jh) J(j,h)(phi(x))`` whose basis
  involves the sine integral, and
* the mat-vec form ``omega(x) @ A @ V g`` with ``A = h I^(-1) D`` and a basis
  made of sinc functions plus linear endpoint corrections.

Row index ``i`` of ``A`` is the output node, column ``j`` the input node.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import toeplitz

from . import specfun
from .errors import InputError
from .transform import SincGrid, endpoint_gaps, phi


def j_basis(j, h: float, x):
    """``J(j,h)(x) = h (1/2 + Si(pi (x - jh) / h) / pi)``; tends to 0 and h at -inf/+inf."""
    x = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        arg = np.pi * (x - np.asarray(j) * h) / h
    y = h * (0.5 + np.asarray(specfun.si(arg)) / np.pi)
    return y.item() if y.ndim == 0 else y


def im1_matrix(m: int) -> np.ndarray:
    """Toeplitz matrix ``I^(-1)_m`` with entries ``delta^(-1)_{i-j}``."""
    k = np.arange(m)
    s = np.asarray(specfun.sigma(k), dtype=float).reshape(m)
    return toeplitz(0.5 + s, 0.5 - s)


def _omega(grid: SincGrid, u: np.ndarray, eta: np.ndarray, eta_t: np.ndarray) -> np.ndarray:
    finite = np.isfinite(u)
    z = (np.where(finite, u, 0.0)[:, None] - grid.points[None, :]) / grid.h
    S = np.where(finite[:, None], np.sinc(z), 0.0)
    L = grid.interval.length
    eta_nodes = grid.left_gaps / L
    eta_t_nodes = grid.right_gaps / L
    W = S.copy()
    W[:, 0] = (eta_t - S[:, 1:] @ eta_t_nodes[1:]) / eta_t_nodes[0]
    W[:, -1] = (eta - S[:, :-1] @ eta_nodes[:-1]) / eta_nodes[-1]
    return W


def omega_basis(grid: SincGrid, x):
    """Row vector(s) ``omega_m(x)``; shape ``(m,)`` for scalar ``x``, else ``(len(x), m)``."""
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(grid.interval.check(x))
    u = np.atleast_1d(phi(grid.kind, grid.interval, xs))
    L = grid.interval.length
    W = _omega(grid, u, (xs - grid.interval.a) / L, (grid.interval.b - xs) / L)
    return W[0] if scalar else W


def omega_basis_u(grid: SincGrid, u):
    """:func:`omega_basis` at ``x = psi(u)``, parametrised by the transformed variable.

    Avoids the rounding of ``phi(psi(u))`` near the endpoints, so the
    Kronecker property at the Sinc points holds to machine precision.
    """
    scalar = np.ndim(u) == 0
    u = np.atleast_1d(np.asarray(u, dtype=float))
    left, right = endpoint_gaps(grid.kind, grid.interval, u)
    L = grid.interval.length
    W = _omega(grid, u, left / L, right / L)
    return W[0] if scalar else W


@dataclass(frozen=True, eq=False)
class IndefMatrix:
    grid: SincGrid
    A: np.ndarray


def build_A(grid: SincGrid) -> IndefMatrix:
    """``A_m = h I^(-1)_m D_m``, entries ``h delta^(-1)_{i-j} psi'(jh)``."""
    A = grid.h * im1_matrix(grid.m) * grid.weights[None, :]
    A.setflags(write=False)
    return IndefMatrix(grid, A)


def sample(grid: SincGrid, g: Callable) -> np.ndarray:
    """``V_m g``: values of ``g`` at the Sinc points."""
    with np.errstate(all="ignore"):
        v = np.broadcast_to(np.asarray(g(grid.nodes), dtype=float), grid.nodes.shape).copy()
    bad = ~np.isfinite(v)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise InputError(
            f"g is not finite at node j = {grid.indices[i]} (t = {grid.nodes[i]!r}): {v[i]!r}"
        )
    return v


def apply_indef(matrix: IndefMatrix, g: Callable, x):
    """Mat-vec Sinc indefinite integration ``omega(x) A V g``."""
    c = matrix.A @ sample(matrix.grid, g)
    return omega_basis(matrix.grid, x) @ c


def apply_indef_original(grid: SincGrid, g: Callable, x):
    """Original form ``sum_j g(t_j) psi'(jh) J(j,h)(phi(x))``."""
    scalar = np.ndim(x) == 0
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    u = np.atleast_1d(phi(grid.kind, grid.interval, xs))
    coef = sample(grid, g) * grid.weights
    basis = j_basis(grid.indices[None, :], grid.h, u[:, None])
    y = np.atleast_2d(basis) @ coef
    return y[0] if scalar else y
