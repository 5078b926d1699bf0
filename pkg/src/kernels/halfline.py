"""
Real kernels on {1..m} x (0, infinity), all stored conjugation-stripped.

    A~(i,l; j,t) = int_0^inf  exp(-(a_i - a_j) g) Ai(l + s_i + g) Ai(t + s_j + g) dg
    B~(i,l; j,t) = int_R      (same integrand) dg                 for i < j, else 0
    K_ext(i,l; j,t) = A~                                            for i >= j
                    = -int_{-inf}^0 (same integrand) dg             for i < j

with s_i = beta_i + alpha_i^2. B~ is evaluated in closed form (Gaussian times
the conjugation strip); the lower half-line integral of K_ext is computed
directly so that K_ext = A~ - B~ is a genuine identity between two quadratures.
"""

import logging
import math

import numpy as np

from kernels.block import BlockKernel, Domain
from kernels.point_config import PointConfig
from quadrature.rules import gauss_legendre, panels_for
from special.airy import airy_ai
from utils import RunConfig

logger = logging.getLogger(__name__)

# Ai(x)^2 < 1e-36 once x > 18
AIRY_REACH = 18.0
# exp(-40) < 1e-17 on the lower half line
GAUSSIAN_REACH = 40.0
LOWER_PANEL = 0.5
LOWER_PANEL_NODES = 16


def _as_nodes(x) -> np.ndarray:
    return np.atleast_1d(np.asarray(x, dtype=float))


def _airy_product(x: np.ndarray, y: np.ndarray, gamma: np.ndarray, weights: np.ndarray) -> np.ndarray:
    # sum_k Ai(x_a + g_k) w_k Ai(y_b + g_k)
    left = airy_ai(x[:, None] + gamma[None, :])
    right = airy_ai(y[:, None] + gamma[None, :])
    return (left * weights[None, :]) @ right.T


def upper_gamma_rule(cfg: PointConfig, i: int, j: int, config: RunConfig):
    """Gauss-Legendre rule on [0, gamma_max] shared by every (lambda, theta) of block (i, j)."""
    gamma_max = max(AIRY_REACH - min(cfg.shift(i), cfg.shift(j)), 2.0)
    return gauss_legendre(0.0, gamma_max, config.gamma_nodes)


def lower_gamma_rule(delta: float):
    """Panelled rule on [-40/delta, 0] for the exp(delta g) weighted lower integral."""
    gamma_min = -GAUSSIAN_REACH / delta
    return gauss_legendre(gamma_min, 0.0, LOWER_PANEL_NODES, panels_for(-gamma_min, LOWER_PANEL))


def conjugation_weight(cfg: PointConfig, i: int, lam) -> np.ndarray:
    """d(i, l) = exp(-2 a_i^3 / 3 - (l + b_i) a_i); the raw A and B are d(i,l) X~ / d(j,t)."""
    a = cfg.a(i)
    return np.exp(-2 * a ** 3 / 3 - (_as_nodes(lam) + cfg.b(i)) * a)


def A_tilde_block(cfg: PointConfig, i: int, lam, j: int, theta, config: RunConfig) -> np.ndarray:
    cfg.check_index(i)
    cfg.check_index(j)
    gamma, w = upper_gamma_rule(cfg, i, j, config)
    weights = w * np.exp(-(cfg.a(i) - cfg.a(j)) * gamma)
    return _airy_product(_as_nodes(lam) + cfg.shift(i), _as_nodes(theta) + cfg.shift(j), gamma, weights)


def B_tilde_block(cfg: PointConfig, i: int, lam, j: int, theta) -> np.ndarray:
    cfg.check_index(i)
    cfg.check_index(j)
    lam = _as_nodes(lam)[:, None]
    theta = _as_nodes(theta)[None, :]
    if i >= j:
        return np.zeros((lam.shape[0], theta.shape[1]))

    ai, aj = cfg.a(i), cfg.a(j)
    bi, bj = cfg.b(i), cfg.b(j)
    delta = aj - ai
    strip = 2 * ai ** 3 / 3 + (lam + bi) * ai - 2 * aj ** 3 / 3 - (theta + bj) * aj
    gaussian = -(bj + theta - bi - lam) ** 2 / (4 * delta)
    return np.exp(strip + gaussian) / (2 * math.sqrt(math.pi * delta))


def lower_block(cfg: PointConfig, i: int, lam, j: int, theta) -> np.ndarray:
    """-int_{-inf}^0 exp((a_j - a_i) g) Ai(l + s_i + g) Ai(t + s_j + g) dg, for i < j."""
    delta = cfg.a(j) - cfg.a(i)
    gamma, w = lower_gamma_rule(delta)
    weights = w * np.exp(delta * gamma)
    return -_airy_product(_as_nodes(lam) + cfg.shift(i), _as_nodes(theta) + cfg.shift(j), gamma, weights)


def ext_airy_block(cfg: PointConfig, i: int, lam, j: int, theta, config: RunConfig) -> np.ndarray:
    cfg.check_index(i)
    cfg.check_index(j)
    if i >= j:
        return A_tilde_block(cfg, i, lam, j, theta, config)
    return lower_block(cfg, i, lam, j, theta)


def kernel_A_tilde(cfg: PointConfig, i: int, lam: float, j: int, theta: float, config: RunConfig) -> float:
    return float(A_tilde_block(cfg, i, lam, j, theta, config)[0, 0])


def kernel_B_tilde(cfg: PointConfig, i: int, lam: float, j: int, theta: float) -> float:
    return float(B_tilde_block(cfg, i, lam, j, theta)[0, 0])


def kernel_ext_airy(cfg: PointConfig, i: int, x_offset: float, j: int, y_offset: float, config: RunConfig) -> float:
    """
    The conjugated extended Airy kernel at x = x_offset + beta_i + alpha_i^2,
    y = y_offset + beta_j + alpha_j^2.
    """
    if x_offset < 0 or y_offset < 0:
        raise ValueError(f"Offsets must be nonnegative, got {x_offset}, {y_offset}")
    return float(ext_airy_block(cfg, i, x_offset, j, y_offset, config)[0, 0])


def A_minus_B_kernel(cfg: PointConfig, config: RunConfig) -> BlockKernel:
    """A~ - B~ as a block kernel; det(I - this) is the b-minus-a pipeline."""

    def block(i, lam, j, theta):
        return A_tilde_block(cfg, i, lam, j, theta, config) - B_tilde_block(cfg, i, lam, j, theta)

    return BlockKernel(block, cfg.m, Domain.HALF_LINE, "A~ - B~")


def ext_airy_kernel(cfg: PointConfig, config: RunConfig) -> BlockKernel:

    def block(i, lam, j, theta):
        return ext_airy_block(cfg, i, lam, j, theta, config)

    return BlockKernel(block, cfg.m, Domain.HALF_LINE, "extended Airy")


def A_tilde_kernel(cfg: PointConfig, config: RunConfig) -> BlockKernel:

    def block(i, lam, j, theta):
        return A_tilde_block(cfg, i, lam, j, theta, config)

    return BlockKernel(block, cfg.m, Domain.HALF_LINE, "A~")


def B_tilde_kernel(cfg: PointConfig) -> BlockKernel:

    def block(i, lam, j, theta):
        return B_tilde_block(cfg, i, lam, j, theta)

    return BlockKernel(block, cfg.m, Domain.HALF_LINE, "B~")
