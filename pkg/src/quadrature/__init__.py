"""
Quadrature layer: Gauss-Legendre rules, discretized contours and the nested
contour families of the m-point kernels.
"""

from .contours import (
    ContourKind,
    ContourSpec,
    Orientation,
    QuadratureContour,
    build_contour,
    circle,
    integrate,
    integrate_with_estimate,
    is_right_of,
    ray_pair,
    refine,
    reverse,
    vertical_line,
)
from .family import ContourFamily, build_family, validate_ordering
from .rules import gauss_legendre, panels_for

__all__ = [
    'ContourKind',
    'ContourSpec',
    'Orientation',
    'QuadratureContour',
    'build_contour',
    'circle',
    'integrate',
    'integrate_with_estimate',
    'is_right_of',
    'ray_pair',
    'refine',
    'reverse',
    'vertical_line',
    'ContourFamily',
    'build_family',
    'validate_ordering',
    'gauss_legendre',
    'panels_for',
]
