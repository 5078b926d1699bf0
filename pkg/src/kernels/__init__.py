"""
Kernels of the m-point distribution: point configurations, the weights f_i
and F_i, the contour kernels h_i, K and L, and the half-line kernels
A~, B~ and the extended Airy kernel.
"""

from .point_config import PointConfig, from_pairs, parse_points
from .scalar import eval_F, eval_f
from .block import BlockKernel, Domain, conjugate, zero_kernel
from .halfline import (
    A_minus_B_kernel,
    A_tilde_block,
    A_tilde_kernel,
    B_tilde_block,
    B_tilde_kernel,
    conjugation_weight,
    ext_airy_block,
    ext_airy_kernel,
    kernel_A_tilde,
    kernel_B_tilde,
    kernel_ext_airy,
)
from .contour import (
    K_kernel,
    K_matrix,
    L_decomposed_matrix,
    L_kernel,
    L_matrix,
    eval_h,
    h_matrix,
    kernel_A1,
    kernel_A2,
    kernel_A_contour,
    kernel_B_contour,
    kernel_K,
    kernel_L,
    kernel_L1,
    kernel_L_decomposed,
    kernel_family,
)

__all__ = [
    'PointConfig',
    'from_pairs',
    'parse_points',
    'eval_F',
    'eval_f',
    'BlockKernel',
    'Domain',
    'conjugate',
    'zero_kernel',
    'A_minus_B_kernel',
    'A_tilde_block',
    'A_tilde_kernel',
    'B_tilde_block',
    'B_tilde_kernel',
    'conjugation_weight',
    'ext_airy_block',
    'ext_airy_kernel',
    'kernel_A_tilde',
    'kernel_B_tilde',
    'kernel_ext_airy',
    'K_kernel',
    'K_matrix',
    'L_decomposed_matrix',
    'L_kernel',
    'L_matrix',
    'eval_h',
    'h_matrix',
    'kernel_A1',
    'kernel_A2',
    'kernel_A_contour',
    'kernel_B_contour',
    'kernel_K',
    'kernel_L',
    'kernel_L1',
    'kernel_L_decomposed',
    'kernel_family',
]
