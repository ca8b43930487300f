"""Dense matrix functions ``F(A)`` for the Sinc integration matrices.

Two independent routes are provided:

``eig``
    ``X diag(F(lambda)) X^(-1)`` from a dense nonsymmetric eigensolve.
``contour``
    Trapezoidal discretisation of ``(1/2 pi i) oint F(z) (z I - A)^(-1) dz``
    over the circle ``|z| = rho``.
``direct``
    A symbol-specific matrix algorithm supplied as ``LaplaceSymbol.matrix_eval``.

``A_m`` is far from normal (``||A||_2`` is typically tens of times its spectral
radius) and its eigenvector matrix becomes very ill-conditioned as ``n`` grows
(``cond(X)`` passes 1e12 around n = 40 for DE grids), so the eigen route loses
digits roughly in proportion to ``cond(X)``.  ``auto`` therefore
takes the contour route whenever the symbol is analytic on a disk enclosing the
spectrum, then ``direct`` when the symbol provides it, and ``eig`` otherwise.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.linalg import schur, solve_triangular

from .errors import MatfunError, ParameterError, SymbolSingularError

COND_LIMIT = 1e12


@dataclass(frozen=True)
class LaplaceSymbol:
    """``F(s) = fhat(1/s)`` together with what is known about its singularities.

    ``analyticity_radius`` is a radius ``r`` such that F is analytic on the
    closed disk ``|z| <= r``; ``math.inf`` for entire symbols and ``0.0`` for
    symbols that are not analytic at the origin.

    ``matrix_eval``, when given, maps a square matrix to ``F(A)`` by a
    dedicated algorithm (for example ``scipy.linalg.logm``); it backs the
    ``direct`` route for symbols where neither a contour nor an eigenbasis
    is reliable.
    """

    eval: Callable[[np.ndarray], np.ndarray]
    singularities: Sequence[complex] = ()
    analyticity_radius: float = math.inf
    name: str = ""
    matrix_eval: Optional[Callable[[np.ndarray], np.ndarray]] = None

    def __post_init__(self):
        r = self.analyticity_radius
        if not r >= 0:
            raise ParameterError("analyticity_radius must be non-negative")
        if r > 0:
            for s in self.singularities:
                if abs(s) <= r:
                    raise ParameterError(f"singularity {s} lies inside |z| <= {r}")

    def __call__(self, z):
        return self.eval(z)


@dataclass(frozen=True, eq=False)
class EigFactorization:
    X: np.ndarray
    lam: np.ndarray
    cond_estimate: float


@dataclass(eq=False)
class MatfunResult:
    """Value of ``F(A)`` (or ``F(A) @ B``) plus diagnostics."""

    value: np.ndarray
    method: str
    cond_estimate: float = math.nan
    imag_residue: float = 0.0
    singularity_distance: float = math.inf
    rho: float = math.nan
    warnings: list = field(default_factory=list)


def _triangular_eigvecs(T: np.ndarray) -> np.ndarray:
    """Unit-norm eigenvectors of an upper-triangular ``T`` by back substitution."""
    m = T.shape[0]
    lam = np.diag(T)
    V = np.zeros((m, m), dtype=complex)
    tiny = np.finfo(float).eps * max(float(np.linalg.norm(T)), np.finfo(float).tiny)
    for k in range(m):
        V[k, k] = 1.0
        if k:
            S = T[:k, :k] - lam[k] * np.eye(k)
            d = np.diag(S).copy()
            d[np.abs(d) < tiny] = tiny  # perturb exact repeats, as LAPACK's trevc does
            S[np.diag_indices(k)] = d
            V[:k, k] = solve_triangular(S, -T[:k, k])
        V[:, k] /= np.linalg.norm(V[:, k])
    return V


def eig(A) -> EigFactorization:
    """Eigenvalues and eigenvectors via the complex Schur form ``A = Z T Z^H``.

    ``numpy.linalg.eig`` balances by diagonal scaling first; for DE matrices,
    whose column weights span dozens of orders of magnitude, that scaling
    destroys the residual ``||AX - X diag(lambda)||`` in the original norm.
    The Schur route only permutes and stays backward stable.
    """
    A = np.asarray(A, dtype=float)
    if not np.all(np.isfinite(A)):
        raise MatfunError("matrix has non-finite entries")
    try:
        T, Z = schur(A, output="complex")
    except (np.linalg.LinAlgError, ValueError) as exc:
        raise MatfunError(f"eigensolver did not converge: {exc}") from exc
    lam = np.diag(T).copy()
    X = Z @ _triangular_eigvecs(T)
    with np.errstate(all="ignore"):
        cond = float(np.abs(np.linalg.cond(X, 1)))
    if not math.isfinite(cond):
        cond = math.inf
    return EigFactorization(X, lam, cond)


def spectral_radius(A) -> float:
    A = np.asarray(A, dtype=float)
    if A.size == 0:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(A))))


def _singularity_distance(lam, F: LaplaceSymbol):
    best, pair = math.inf, None
    for s in F.singularities:
        dist = np.abs(lam - s)
        i = int(np.argmin(dist))
        if dist[i] < best:
            best, pair = float(dist[i]), (complex(lam[i]), complex(s))
    return best, pair


def _eig_apply(A, F: LaplaceSymbol, B, fac: Optional[EigFactorization]) -> MatfunResult:
    A = np.asarray(A, dtype=float)
    fac = fac or eig(A)
    scale = float(np.linalg.norm(A, 2)) if A.size else 0.0
    dist, pair = _singularity_distance(fac.lam, F)
    notes = []
    if pair is not None and dist <= 1e-8 * scale:
        if pair[1] == 0:
            # Examples 7-9: the origin is always a limit point of the spectrum.
            notes.append(f"eigenvalue {pair[0]} within {dist:.3g} of the singular origin")
        else:
            raise SymbolSingularError(
                f"symbol singular on spectrum: eigenvalue {pair[0]} vs singularity {pair[1]}"
            )
    if fac.cond_estimate > COND_LIMIT:
        notes.append(f"ill-conditioned eigenvectors (cond ~ {fac.cond_estimate:.3g})")
    lam = fac.lam.astype(complex)
    if any(z == 0 for z in F.singularities):
        # eigenvalues below the solver's resolution carry arbitrary signs, which
        # symbols such as s*exp(-1/s) blow up; treat them as the origin
        noise = np.abs(lam) <= A.shape[0] * np.finfo(float).eps * scale
        if np.any(noise):
            lam = np.where(noise, 0.0, lam)
            notes.append(f"{int(noise.sum())} eigenvalue(s) below solver resolution evaluated at the origin")
    with np.errstate(all="ignore"):
        Fl = np.asarray(F(lam), dtype=complex)
        B = np.asarray(B, dtype=complex)
        Y = np.linalg.solve(fac.X, B.reshape(B.shape[0], -1))
        Z = (fac.X @ (Fl[:, None] * Y)).reshape(B.shape)
    value = Z.real
    peak = float(np.max(np.abs(value))) if value.size else 0.0
    resid = float(np.max(np.abs(Z.imag))) if value.size else 0.0
    if math.isfinite(peak) and resid > 1e-8 * max(peak, np.finfo(float).tiny):
        notes.append(f"imaginary residue {resid:.3g} relative to {peak:.3g}")
    return MatfunResult(value, "eig", fac.cond_estimate, resid, dist, warnings=notes)


def matfun_eig(A, F: LaplaceSymbol, factorization: Optional[EigFactorization] = None) -> MatfunResult:
    """``F(A) = Re(X diag(F(lambda)) X^(-1))``."""
    A = np.asarray(A, dtype=float)
    return _eig_apply(A, F, np.eye(A.shape[0]), factorization)


def default_contour_radius(A, F: LaplaceSymbol, radius: Optional[float] = None):
    """Pick ``rho`` for the contour route; returns ``(rho, notes)``.

    The circle is pushed out towards ``||A||_2`` because resolvents of the
    strongly non-normal ``A_m`` near its spectrum amplify rounding errors; it
    is kept at least at twice the spectral radius and, for symbols with finite
    analyticity radius ``r``, inside ``|z| < r``.
    """
    A = np.asarray(A, dtype=float)
    rad = spectral_radius(A) if radius is None else radius
    rho = max(2.0 * rad, float(np.linalg.norm(A, 2)))
    notes = []
    r = F.analyticity_radius
    if rho > r:
        if r <= rad:
            raise MatfunError(
                f"no admissible contour: spectral radius {rad:.3g} >= analyticity radius {r:.3g}"
            )
        rho = 0.5 * (rad + r)
        notes.append(f"contour radius limited to {rho:.3g} by analyticity radius {r:.3g}")
    return rho, notes


def _contour_apply(A, F: LaplaceSymbol, B, rho, K, workers, notes) -> MatfunResult:
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=complex)
    m = A.shape[0]
    if rho is None:
        rho, extra = default_contour_radius(A, F)
        notes = notes + extra
    if not rho > 0:
        raise ParameterError("contour radius must be positive")
    if K < 2 or K % 2:
        raise ParameterError("K must be a positive even integer")
    eye = np.eye(m)

    def term(theta):
        e = np.exp(1j * theta)
        z = rho * e
        return e * complex(F(np.complex128(z))) * np.linalg.solve(z * eye - A, B)

    for offset in (0.0, math.pi / K):
        thetas = 2.0 * math.pi * np.arange(K) / K + offset
        try:
            total = np.zeros(B.shape, dtype=complex)
            # fixed summation order keeps results independent of the worker count
            if workers and workers > 1:
                with ThreadPoolExecutor(workers) as pool:
                    for t in pool.map(term, thetas):
                        total += t
            else:
                for theta in thetas:
                    total += term(theta)
            break
        except np.linalg.LinAlgError:
            notes = notes + [f"singular shifted system; retrying with phase offset {offset:.3g}"]
    else:
        raise MatfunError("contour node coincides with an eigenvalue")
    Z = rho / K * total
    value = Z.real
    resid = float(np.max(np.abs(Z.imag))) if value.size else 0.0
    return MatfunResult(value, "contour", imag_residue=resid, rho=rho, warnings=notes)


def matfun_contour(A, F: LaplaceSymbol, rho: Optional[float] = None, K: int = 256, workers: int = 1) -> MatfunResult:
    """``F(A) ~ Re[(rho/K) sum_k e^(i theta_k) F(z_k) (z_k I - A)^(-1)]``, ``z_k = rho e^(i theta_k)``.

    The caller guarantees that F is analytic on ``|z| <= rho`` and that
    ``rho`` exceeds the spectral radius; otherwise the result is meaningless.
    """
    A = np.asarray(A, dtype=float)
    return _contour_apply(A, F, np.eye(A.shape[0]), rho, K, workers, [])


def _direct_apply(A, F: LaplaceSymbol, B) -> MatfunResult:
    if F.matrix_eval is None:
        raise ParameterError(f"symbol {F.name or F.eval!r} has no matrix_eval for the direct route")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        FA = np.asarray(F.matrix_eval(np.asarray(A, dtype=float)))
    notes = [str(w.message) for w in caught]
    if not np.all(np.isfinite(FA)):
        raise MatfunError("direct matrix function produced non-finite entries")
    Z = FA @ np.asarray(B)
    value = np.real(Z)
    resid = float(np.max(np.abs(np.imag(Z)))) if value.size else 0.0
    return MatfunResult(value, "direct", imag_residue=resid, warnings=notes)


def matfun_direct(A, F: LaplaceSymbol) -> MatfunResult:
    """``F(A)`` from ``F.matrix_eval``, real part kept."""
    A = np.asarray(A, dtype=float)
    return _direct_apply(A, F, np.eye(A.shape[0]))


METHODS = ("auto", "eig", "contour", "direct")


def matfun_apply(A, F: LaplaceSymbol, v, method: str = "auto", K: int = 256, workers: int = 1) -> MatfunResult:
    """``F(A) @ v`` by the requested route (``eig``, ``contour``, ``direct`` or ``auto``)."""
    A = np.asarray(A, dtype=float)
    v = np.asarray(v, dtype=float)
    if method == "eig":
        return _eig_apply(A, F, v, None)
    if method == "contour":
        return _contour_apply(A, F, v, None, K, workers, [])
    if method == "direct":
        return _direct_apply(A, F, v)
    if method != "auto":
        raise ParameterError(f"unknown matfun method {method!r}")
    fac = eig(A)
    rad = float(np.max(np.abs(fac.lam))) if fac.lam.size else 0.0
    if F.analyticity_radius > rad:
        rho, notes = default_contour_radius(A, F, rad)
        res = _contour_apply(A, F, v, rho, K, workers, notes)
        res.cond_estimate = fac.cond_estimate
        return res
    if F.matrix_eval is not None:
        res = _direct_apply(A, F, v)
        res.cond_estimate = fac.cond_estimate
        return res
    res = _eig_apply(A, F, v, fac)
    res.warnings.append("contour route unavailable: symbol not analytic on a disk around the spectrum")
    return res


def warn_all(result: MatfunResult) -> None:
    for note in result.warnings:
        warnings.warn(note, RuntimeWarning, stacklevel=2)
