"""
Nystrom discretization of Fredholm determinants.

Half-line kernels are sampled on Gauss-Legendre nodes of (0, lambda_max],
symmetrically weighted: M = I + sign * sqrt(w_a) k(i, l_a; j, l_b) sqrt(w_b).
Contour kernels use the nodes and complex weights of Gamma_1L:
M = I + K diag(w). Blocks are indexed (i - 1) n + a in both cases.

Every determinant is computed at two resolutions and returned as a
FredholmResult carrying the refinement history.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fredholm.lu import det_lu
from fredholm.results import FredholmResult
from kernels.block import BlockKernel
from kernels.contour import K_matrix, L_kernel, kernel_family
from kernels.halfline import A_minus_B_kernel, A_tilde_kernel, B_tilde_kernel, ext_airy_kernel
from kernels.point_config import PointConfig
from quadrature.rules import gauss_legendre
from utils import RunConfig

logger = logging.getLogger(__name__)


def halfline_nodes(lambda_max: float, n_nodes: int):
    return gauss_legendre(0.0, lambda_max, n_nodes)


def kernel_matrix(kernel: BlockKernel, m: int, lambda_max: float, n_nodes: int) -> np.ndarray:
    """sqrt(w_a) k(i, l_a; j, l_b) sqrt(w_b), blocks indexed (i - 1) n + a."""
    nodes, weights = halfline_nodes(lambda_max, n_nodes)
    root = np.sqrt(weights)
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            row.append(root[:, None] * np.asarray(kernel.block(i, nodes, j, nodes)) * root[None, :])
        rows.append(row)
    return np.block(rows)


def fredholm_det_halfline(kernel: BlockKernel, m: int, lambda_max: float, n_nodes: int, sign: float = -1.0,
                          tol: Optional[float] = None, strict: bool = False) -> FredholmResult:
    """
    det(I + sign * kernel) on L^2({1..m} x (0, lambda_max)).

    Args:
        kernel: block kernel on the half line.
        m: number of point indices.
        lambda_max: truncation of the half line.
        n_nodes: Gauss-Legendre nodes per point index at the coarse resolution.
        sign: -1 for det(I - K), +1 for det(I + K).
        tol: when given, the refinement estimate is checked against it.
        strict: raise ConvergenceError instead of warning.

    Returns:
        FredholmResult with history [(n, det_n), (2n, det_2n)].
    """
    history = []
    for n in (n_nodes, 2 * n_nodes):
        M = np.eye(m * n) + sign * kernel_matrix(kernel, m, lambda_max, n)
        history.append((n, det_lu(M)))
    result = FredholmResult.from_history(history)
    logger.debug(f"det(I {'+' if sign > 0 else '-'} {kernel.name or 'K'}) = {result.value:.12g} "
                 f"(estimate {result.error_estimate:.2e})")
    if tol is not None:
        result.check_convergence(tol, f"half-line determinant of {kernel.name or 'kernel'}", strict)
    return result


def contour_nystrom_matrix(cfg: PointConfig, config: RunConfig) -> np.ndarray:
    """K diag(w) on Gamma_1L nodes of every point index."""
    family = kernel_family(cfg.m, config)
    weights = np.tile(family.left_main.weights, cfg.m)
    return K_matrix(cfg, family) * weights[None, :]


def fredholm_det_contour_nystrom(cfg: PointConfig, config: RunConfig) -> FredholmResult:
    """det(I + K) with K on {1..m} x Gamma_1L, at config and config.refined()."""
    history = []
    for settings in (config, config.refined()):
        KW = contour_nystrom_matrix(cfg, settings)
        history.append((KW.shape[0], det_lu(np.eye(KW.shape[0]) + KW)))
    result = FredholmResult.from_history(history)
    logger.info(f"det(I + K) at {cfg.label()}: {result.real:.12g} (estimate {result.error_estimate:.2e})")
    return result.check_convergence(config.tol, f"det(I + K) at {cfg.label()}", config.strict)


def fredholm_det_ext_airy(cfg: PointConfig, config: RunConfig) -> FredholmResult:
    """det(I - K_ext) on the offsets (0, lambda_max]."""
    result = fredholm_det_halfline(ext_airy_kernel(cfg, config), cfg.m, config.lambda_max, config.halfline_nodes)
    logger.info(f"det(I - K_ext) at {cfg.label()}: {result.real:.12g} (estimate {result.error_estimate:.2e})")
    return result.check_convergence(config.tol, f"det(I - K_ext) at {cfg.label()}", config.strict)


def fredholm_det_b_minus_a(cfg: PointConfig, config: RunConfig) -> FredholmResult:
    """det(I + B~ - A~) on the offsets (0, lambda_max]."""
    result = fredholm_det_halfline(A_minus_B_kernel(cfg, config), cfg.m, config.lambda_max, config.halfline_nodes)
    logger.info(f"det(I + B~ - A~) at {cfg.label()}: {result.real:.12g} (estimate {result.error_estimate:.2e})")
    return result.check_convergence(config.tol, f"det(I + B~ - A~) at {cfg.label()}", config.strict)


def fredholm_det_L(cfg: PointConfig, config: RunConfig) -> FredholmResult:
    """det(I + L) with the contour-built L on (0, lambda_max]."""
    result = fredholm_det_halfline(L_kernel(cfg, config), 1, config.lambda_max, config.halfline_nodes, sign=1.0)
    logger.info(f"det(I + L) at {cfg.label()}: {result.real:.12g} (estimate {result.error_estimate:.2e})")
    return result.check_convergence(config.tol, f"det(I + L) at {cfg.label()}", config.strict)


@dataclass(frozen=True)
class TriangularCheck:
    direct: complex
    factored: complex
    nilpotent: bool

    @property
    def deviation(self) -> float:
        return abs(self.direct - self.factored)


def triangular_factorization_check(cfg: PointConfig, config: RunConfig) -> TriangularCheck:
    """
    det(I + B~ - A~) against det((I + B~)(I - sum_{k<m} (-B~)^k A~)) on the
    Nystrom matrices; B~ is strictly block upper triangular, so B~^m = 0.
    """
    n = config.halfline_nodes
    A = kernel_matrix(A_tilde_kernel(cfg, config), cfg.m, config.lambda_max, n)
    B = kernel_matrix(B_tilde_kernel(cfg), cfg.m, config.lambda_max, n)
    identity = np.eye(A.shape[0])

    series = np.zeros_like(B)
    power = identity.copy()
    for _ in range(cfg.m):
        series = series + power
        power = power @ (-B)
    nilpotent = bool(np.all(power == 0))

    direct = det_lu(identity + B - A)
    factored = det_lu((identity + B) @ (identity - series @ A))
    return TriangularCheck(direct, factored, nilpotent)
