"""Exception hierarchy shared across the package."""


class FinOrthoError(Exception):
    """Base class for all package-specific errors."""


class ParameterError(FinOrthoError):
    """A family parameter violates its validity conditions."""


class AdmissibilityError(FinOrthoError):
    """An index lies outside the finite orthogonality range of the family."""


class PoleError(FinOrthoError):
    """A gamma-type function was evaluated at a pole."""


class RealnessError(FinOrthoError):
    """A nominally real quantity came out with a too-large imaginary part."""


class DivergenceError(FinOrthoError):
    """A requested integral or moment does not converge."""


class NonConvergenceError(FinOrthoError):
    """Quadrature failed to reach the requested tolerance at the maximum level."""


class UnsupportedShapeError(FinOrthoError):
    """Equation coefficients do not match any supported weight derivation."""
