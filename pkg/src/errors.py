"""
Exception types shared across the numerical packages.

Validation problems subclass ValueError, numerical breakdowns subclass
ArithmeticError or RuntimeError. main.py maps them onto exit codes.
"""


class InvalidPointsError(ValueError):
    """Point configuration is malformed or alpha is not strictly increasing."""


class ContourOrderingError(ValueError):
    """Nested contours cross, or leave the half plane they belong to."""


class CostGuardError(ValueError):
    """A multi-index, series order or enumeration exceeds its cost guard."""


class NonFiniteIntegrandError(ArithmeticError):
    """An integrand returned inf or nan at a quadrature node."""

    def __init__(self, node, value):
        super().__init__(f"Non-finite integrand value {value} at node {node}")
        self.node = node
        self.value = value


class SingularMatrixError(ArithmeticError):
    """LU factorization met a pivot below the singularity threshold."""


class ConvergenceError(RuntimeError):
    """A refinement estimate stayed above the requested tolerance."""
