"""
Fredholm determinants of block kernels: LU determinants, Nystrom
discretizations on the half line and on Gamma_1L, and truncated series.
"""

from .lu import det_lu, log_det_lu
from .results import FredholmResult
from .nystrom import (
    TriangularCheck,
    contour_nystrom_matrix,
    fredholm_det_L,
    fredholm_det_b_minus_a,
    fredholm_det_contour_nystrom,
    fredholm_det_ext_airy,
    fredholm_det_halfline,
    kernel_matrix,
    triangular_factorization_check,
)
from .series import elementary_symmetric, fredholm_det_contour_series, grouped_series_terms, series_term_by_minors

__all__ = [
    'det_lu',
    'log_det_lu',
    'FredholmResult',
    'TriangularCheck',
    'contour_nystrom_matrix',
    'fredholm_det_L',
    'fredholm_det_b_minus_a',
    'fredholm_det_contour_nystrom',
    'fredholm_det_ext_airy',
    'fredholm_det_halfline',
    'kernel_matrix',
    'triangular_factorization_check',
    'elementary_symmetric',
    'fredholm_det_contour_series',
    'grouped_series_terms',
    'series_term_by_minors',
]
