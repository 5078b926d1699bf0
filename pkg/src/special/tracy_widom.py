"""
GUE Tracy-Widom distribution F_GUE(s) = det(I - K_Ai) on L^2(s, infinity).
"""

import logging
import math
from typing import Optional

from fredholm.nystrom import fredholm_det_halfline
from fredholm.results import FredholmResult
from kernels.block import BlockKernel, Domain
from special.airy import airy_kernel
from utils import RunConfig

logger = logging.getLogger(__name__)

TABLE_COLUMNS = ["s", "F_GUE(s)"]


def shifted_airy_kernel(s: float) -> BlockKernel:
    """K_Ai(s + x, s + y) on offsets x, y > 0."""

    def block(i, x, j, y):
        return airy_kernel(s + x, s + y)

    return BlockKernel(block, 1, Domain.HALF_LINE, f"K_Ai shifted by {s:g}")


def f_gue(s: float, config: Optional[RunConfig] = None) -> FredholmResult:
    """
    F_GUE(s) by Gauss-Legendre Nystrom on (s, s + lambda_max].

    Raises:
        ValueError: if s is not finite.
        SingularMatrixError / ConvergenceError: from the determinant.
    """
    config = config or RunConfig()
    s = float(s)
    if not math.isfinite(s):
        raise ValueError(f"f_gue needs a finite argument, got {s}")
    result = fredholm_det_halfline(shifted_airy_kernel(s), 1, config.lambda_max, config.halfline_nodes)
    return result.check_convergence(config.tol, f"F_GUE({s:g})", config.strict)
