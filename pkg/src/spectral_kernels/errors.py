"""Exception types shared across the package."""


class SpectralKernelsError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(SpectralKernelsError, ValueError):
    """Invalid input data: parameters, points, or file contents."""


class NumericalError(SpectralKernelsError, RuntimeError):
    """A numerical computation could not be completed reliably."""
