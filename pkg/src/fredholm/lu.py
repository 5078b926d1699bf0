"""
Determinants through row-pivoted LU.

The product of the pivots is accumulated as a log-magnitude and a phase so
that large Nystrom systems neither overflow nor underflow on the way.
"""

import math
from typing import Tuple

import numpy as np
from scipy import linalg

from errors import SingularMatrixError

PIVOT_FLOOR = 1e-300


def log_det_lu(M: np.ndarray) -> Tuple[float, float]:
    """
    Returns:
        (log|det M|, arg det M)

    Raises:
        ValueError: if M is not square or has non-finite entries.
        SingularMatrixError: if a pivot has magnitude below 1e-300.
    """
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"det_lu needs a square matrix, got shape {M.shape}")
    if M.shape[0] == 0:
        return 0.0, 0.0

    lu, piv = linalg.lu_factor(M.astype(complex), check_finite=True)
    pivots = np.diag(lu)
    magnitudes = np.abs(pivots)
    smallest = int(np.argmin(magnitudes))
    if magnitudes[smallest] < PIVOT_FLOOR:
        raise SingularMatrixError(f"Pivot {smallest} has magnitude {magnitudes[smallest]:.3e}, matrix is numerically singular")

    swaps = int(np.count_nonzero(piv != np.arange(len(piv))))
    log_magnitude = float(np.sum(np.log(magnitudes)))
    phase = float(np.sum(np.angle(pivots))) + math.pi * swaps
    return log_magnitude, phase


def det_lu(M: np.ndarray) -> complex:
    log_magnitude, phase = log_det_lu(M)
    return complex(math.exp(log_magnitude) * complex(math.cos(phase), math.sin(phase)))
