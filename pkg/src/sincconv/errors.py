"""Exception hierarchy shared by all modules."""


class SincConvError(Exception):
    """Base class for every error raised by :mod:`sincconv`."""


class ParameterError(SincConvError, ValueError):
    """A numerical parameter (d, n, alpha, ...) is outside its admissible range."""


class DomainError(SincConvError, ValueError):
    """An evaluation point lies outside the interval [a, b]."""


class InputError(SincConvError, ValueError):
    """A user-supplied function produced a non-finite sample."""


class SymbolSingularError(SincConvError):
    """An eigenvalue collides with a declared singularity of the symbol."""


class MatfunError(SincConvError):
    """A matrix-function evaluation could not be carried out."""


class ConvolutionError(SincConvError):
    """The convolution coefficients are non-finite."""


class InsufficientDataError(SincConvError, ValueError):
    """Too few usable records for a convergence-rate fit."""
