"""Sinc convolution with single- and double-exponential transformations."""

from .conv import ConvApproximant, build_convolution, max_error
from .errors import SincConvError
from .matfun import LaplaceSymbol, matfun_apply, matfun_contour, matfun_direct, matfun_eig, spectral_radius
from .sincquad import apply_indef, apply_indef_original, build_A, omega_basis, sample
from .transform import Balanced, Interval, SincGrid, TransformKind, Weighted, make_grid, phi, psi, psi_prime

__version__ = "0.1.0"
