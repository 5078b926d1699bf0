"""
Special functions: the Airy function and the GUE Tracy-Widom distribution.

Only the Airy layer is re-exported here; it sits below the kernels. The
Tracy-Widom distribution is a Fredholm determinant and lives in
special.tracy_widom, imported directly.
"""

from .airy import (
    AiryValue,
    airy_ai,
    airy_ai_expansion,
    airy_ai_prime,
    airy_ai_via_contour,
    airy_contour_spec,
    airy_kernel,
    airy_value_via_contour,
)

__all__ = [
    'AiryValue',
    'airy_ai',
    'airy_ai_expansion',
    'airy_ai_prime',
    'airy_ai_via_contour',
    'airy_contour_spec',
    'airy_kernel',
    'airy_value_via_contour',
]
