"""
Brute-force checks of standalone identities: the block Andreief identity,
integration against antisymmetric weights, and the Gaussian-Airy integral.
"""

from .andreief import (
    AndreiefInstance,
    AndreiefPair,
    BlockPartition,
    DiscreteMeasure,
    andreief_pair,
    andreief_sweep,
    exact_det,
    polynomial,
    random_instance,
)
from .antisymmetry import AntisymmetryReport, antisymmetry_check, vandermonde_weight
from .gaussian_airy import GaussianAiryPair, closed_form, gaussian_airy_integral, left_limit, okounkov_pair

__all__ = [
    'AndreiefInstance',
    'AndreiefPair',
    'BlockPartition',
    'DiscreteMeasure',
    'andreief_pair',
    'andreief_sweep',
    'exact_det',
    'polynomial',
    'random_instance',
    'AntisymmetryReport',
    'antisymmetry_check',
    'vandermonde_weight',
    'GaussianAiryPair',
    'closed_form',
    'gaussian_airy_integral',
    'left_limit',
    'okounkov_pair',
]
