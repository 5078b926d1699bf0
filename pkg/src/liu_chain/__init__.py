"""
The equal-time multipoint formula: the terms D_n, their z-integrals and
the three simplified forms leading to the kernel h_i.
"""

from .cauchy import ComplexVector, cauchy_det, cauchy_det_direct, conjoin
from .multi_index import MultiIndex, enumerate_indices
from .leibniz import DeterminantFactor, Variable, leibniz_integral
from .expansion import (
    ChainComparison,
    DirectExpansion,
    Stage,
    airy_cdf_via_sum,
    chain_family,
    direct_expansion,
    eval_D_n,
    eval_D_n_core,
    hat_D_direct,
    hat_D_stage,
    grouped_term_check,
)

__all__ = [
    'ComplexVector',
    'cauchy_det',
    'cauchy_det_direct',
    'conjoin',
    'MultiIndex',
    'enumerate_indices',
    'DeterminantFactor',
    'Variable',
    'leibniz_integral',
    'ChainComparison',
    'DirectExpansion',
    'Stage',
    'airy_cdf_via_sum',
    'chain_family',
    'direct_expansion',
    'eval_D_n',
    'eval_D_n_core',
    'hat_D_direct',
    'hat_D_stage',
    'grouped_term_check',
]
