"""Scalar special functions used by the Sinc bases and the example references.

Every function accepts a scalar or an array and behaves like a numpy ufunc.
The heavy lifting is delegated to :mod:`scipy.special` (Cephes), which is
accurate to a few ulps on the ranges used here.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import special

from .errors import ParameterError

EULER_GAMMA = float(np.euler_gamma)


def _out(y):
    return y.item() if isinstance(y, np.ndarray) and y.ndim == 0 else y


def sinc(x):
    """Normalized sinc, ``sin(pi x) / (pi x)``, with ``sinc(0) = 1``.

    Infinite arguments map to 0 (the limit), which the basis functions rely on
    when they are evaluated at the interval endpoints.
    """
    x = np.asarray(x, dtype=float)
    with np.errstate(invalid="ignore"):
        y = np.where(np.isinf(x), 0.0, np.sinc(np.where(np.isinf(x), 0.0, x)))
    return _out(y)


def si(x):
    """Sine integral ``Si(x) = int_0^x sin(t)/t dt``; ``Si(+-inf) = +-pi/2``."""
    with np.errstate(invalid="ignore"):
        s, _ = special.sici(np.asarray(x, dtype=float))
    return _out(s)


def sigma(k):
    """``sigma_k = int_0^k sinc(t) dt = Si(pi k) / pi``."""
    k = np.asarray(k)
    return _out(np.asarray(si(np.pi * k.astype(float))) / np.pi)


def delta_im1(k):
    """Entry ``delta^(-1)_k = 1/2 + sigma_k`` of the Sinc integration matrix."""
    return _out(0.5 + np.asarray(sigma(k)))


def erf(x):
    return _out(special.erf(np.asarray(x, dtype=float)))


def fresnel_c(x):
    """Fresnel cosine integral ``C(x) = int_0^x cos(pi t^2 / 2) dt``."""
    _, c = special.fresnel(np.asarray(x, dtype=float))
    return _out(c)


def fresnel_s(x):
    """Fresnel sine integral ``S(x) = int_0^x sin(pi t^2 / 2) dt``."""
    s, _ = special.fresnel(np.asarray(x, dtype=float))
    return _out(s)


def bessel_j0(x):
    return _out(special.j0(np.asarray(x, dtype=float)))


def gamma_fn(x):
    """Gamma function; raises :class:`ParameterError` at the poles 0, -1, -2, ..."""
    xa = np.asarray(x, dtype=float)
    poles = (xa <= 0) & (xa == np.floor(xa))
    if np.any(poles):
        raise ParameterError(f"gamma_fn has a pole at {xa[poles].ravel()[0]:g}")
    return _out(special.gamma(xa))


def heaviside(x):
    """Unit step with ``H(0) = 1``."""
    return _out(np.heaviside(np.asarray(x, dtype=float), 1.0))


# Constant of the Example 8 reference, sqrt(pi) / (2 Gamma(17/6)).
EXAMPLE8_CONSTANT = math.sqrt(math.pi) / (2.0 * gamma_fn(17.0 / 6.0))
