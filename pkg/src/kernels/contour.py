"""
Contour-integral kernels of the m-point formula.

    h_i(u, v)       = F_1(u) / (u - v)                                     i = 1
                    = int F_1(u) prod F_l(u_l) / ((u - u_2) ... (u_i - v))  i >= 2
    K(i,z; j,u)     = int_{Gamma_1R} h_i(z, v) / f_i(v) / (v - u)
    L1(i,z; l)      = int_{Gamma_1R} h_i(z, v) / (f_i(v) e^{l v})
    L(l, t)         = sum_i int_{Gamma_1L} e^{l u} L1(i, u; t)

The u_l run over Gamma_{l,L}^in, every integral carries the 1/(2 pi i)
measure. Each kernel is built on whole node sets as a chain of Cauchy
matrices 1/(x - y) scaled by weight vectors, so one call evaluates a full
Nystrom block.

The second half of the module holds the A1 . B . A2 decomposition of L,
with A1, A2 and B both as contour integrals and in closed form.
"""

import itertools
import logging
import math
from functools import lru_cache

import numpy as np

from errors import ContourOrderingError
from kernels.block import BlockKernel, Domain
from kernels.point_config import PointConfig
from kernels.scalar import eval_F, eval_f
from kernels.halfline import AIRY_REACH, A_tilde_block, conjugation_weight
from quadrature.contours import build_contour, is_right_of, vertical_line
from quadrature.family import ContourFamily, build_family
from quadrature.rules import gauss_legendre, panels_for
from special.airy import airy_ai
from utils import RunConfig

logger = logging.getLogger(__name__)

LINE_PANEL = 4.0
CHAIN_GAMMA_PANEL = 1.0
CHAIN_GAMMA_NODES = 16
# room for the B Gaussians of intermediate chain variables
CHAIN_GAMMA_MARGIN = 10.0


def _nodes(x) -> np.ndarray:
    return np.atleast_1d(np.asarray(x, dtype=complex))


def cauchy_matrix(x, y) -> np.ndarray:
    """[1 / (x_a - y_b)]."""
    return 1.0 / (_nodes(x)[:, None] - _nodes(y)[None, :])


@lru_cache(maxsize=32)
def kernel_family(m: int, config: RunConfig) -> ContourFamily:
    """Gamma_1L, Gamma_{l,L}^in and Gamma_1R at the kernel angle."""
    return build_family(m, config, right_angle=config.kernel_right_angle, kernel_only=True)


def _check_right_of_inner(points, family: ContourFamily, i: int, label: str) -> None:
    if i < 2:
        return
    inner = family.left(2, "in").spec
    if not np.all(is_right_of(points, inner)):
        raise ContourOrderingError(f"{label} must lie strictly right of Gamma_2L^in (apex {inner.vertex.real:g})")


def _check_left_of_right_main(points, family: ContourFamily, label: str) -> None:
    if np.any(is_right_of(points, family.right_main.spec)) or np.any(_nodes(points).real >= 0):
        raise ContourOrderingError(f"{label} must lie in the left half plane, left of Gamma_1R")


def h_matrix(cfg: PointConfig, i: int, u, v, family: ContourFamily) -> np.ndarray:
    """
    h_i on the grid u x v.

    Raises:
        ContourOrderingError: if u or v is not strictly right of the inner contours.
    """
    cfg.check_index(i)
    u, v = _nodes(u), _nodes(v)
    _check_right_of_inner(u, family, i, "u")
    _check_right_of_inner(v, family, i, "v")

    prefactor = eval_F(cfg, 1, u)
    if i == 1:
        return prefactor[:, None] * cauchy_matrix(u, v)

    M = prefactor[:, None] * cauchy_matrix(u, family.left(2, "in").points)
    for ell in range(2, i + 1):
        qc = family.left(ell, "in")
        M = M * (qc.weights * eval_F(cfg, ell, qc.points))[None, :]
        target = family.left(ell + 1, "in").points if ell < i else v
        M = M @ cauchy_matrix(qc.points, target)
    return M


def eval_h(cfg: PointConfig, i: int, u: complex, v: complex, config: RunConfig) -> complex:
    family = kernel_family(cfg.m, config)
    return complex(h_matrix(cfg, i, u, v, family)[0, 0])


def _v_weights(cfg: PointConfig, i: int, family: ContourFamily) -> np.ndarray:
    qc = family.right_main
    return qc.weights / eval_f(cfg, i, qc.points)


def K_block(cfg: PointConfig, i: int, z, u, family: ContourFamily) -> np.ndarray:
    """K(i, z_a; j, u_b); the kernel does not depend on j."""
    _check_left_of_right_main(u, family, "u")
    v = family.right_main.points
    H = h_matrix(cfg, i, z, v, family)
    return (H * _v_weights(cfg, i, family)[None, :]) @ cauchy_matrix(v, u)


def K_matrix(cfg: PointConfig, family: ContourFamily) -> np.ndarray:
    """
    The (m n) x (m n) matrix of K on Gamma_1L nodes, blocks indexed (i-1) n + a.
    Quadrature weights are not applied.
    """
    z = family.left_main.points
    rows = []
    for i in range(1, cfg.m + 1):
        block = K_block(cfg, i, z, z, family)
        rows.append([block] * cfg.m)
    return np.block(rows)


def kernel_K(cfg: PointConfig, i: int, z: complex, j: int, u: complex, config: RunConfig) -> complex:
    cfg.check_index(j)
    family = kernel_family(cfg.m, config)
    return complex(K_block(cfg, i, z, u, family)[0, 0])


def K_kernel(cfg: PointConfig, config: RunConfig) -> BlockKernel:
    family = kernel_family(cfg.m, config)

    def block(i, z, j, u):
        cfg.check_index(j)
        return K_block(cfg, i, z, u, family)

    return BlockKernel(block, cfg.m, Domain.LEFT_CONTOUR, "K")


def _exp_rows(lam, nodes, sign: float) -> np.ndarray:
    # [exp(sign * lam_a * node_k)]
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    return np.exp(sign * lam[:, None] * _nodes(nodes)[None, :])


def _check_halfline(*args) -> None:
    for x in args:
        if np.any(np.atleast_1d(x) < 0):
            raise ValueError(f"Half-line arguments must be nonnegative, got {x}")


def L1_block(cfg: PointConfig, i: int, z, lam, family: ContourFamily) -> np.ndarray:
    _check_halfline(lam)
    v = family.right_main.points
    H = h_matrix(cfg, i, z, v, family)
    return (H * _v_weights(cfg, i, family)[None, :]) @ _exp_rows(lam, v, -1.0).T


def kernel_L1(cfg: PointConfig, i: int, z: complex, lam: float, config: RunConfig) -> complex:
    family = kernel_family(cfg.m, config)
    return complex(L1_block(cfg, i, z, lam, family)[0, 0])


def L_matrix(cfg: PointConfig, lam, theta, family: ContourFamily) -> np.ndarray:
    """L(lam_a, theta_b) as the sum over i of E . H_i . G_i."""
    _check_halfline(lam, theta)
    left = family.left_main
    v = family.right_main.points
    E = _exp_rows(lam, left.points, 1.0) * left.weights[None, :]
    total = 0
    for i in range(1, cfg.m + 1):
        H = h_matrix(cfg, i, left.points, v, family)
        G = _v_weights(cfg, i, family)[:, None] * _exp_rows(theta, v, -1.0).T
        total = total + E @ H @ G
    return total


def kernel_L(cfg: PointConfig, lam: float, theta: float, config: RunConfig) -> complex:
    family = kernel_family(cfg.m, config)
    return complex(L_matrix(cfg, lam, theta, family)[0, 0])


def L_kernel(cfg: PointConfig, config: RunConfig) -> BlockKernel:
    """L as a scalar (m = 1 block) kernel on the half line."""
    family = kernel_family(cfg.m, config)

    def block(i, lam, j, theta):
        return L_matrix(cfg, lam, theta, family)

    return BlockKernel(block, 1, Domain.HALF_LINE, "L")


# A1 . B . A2 decomposition


def A1_contour_matrix(cfg: PointConfig, i: int, lam, gamma, family: ContourFamily) -> np.ndarray:
    """A1(lam_a; i, gamma_k) = int_{Gamma_1L} f_i(u) e^{(lam + gamma) u}."""
    cfg.check_index(i)
    left = family.left_main
    weights = left.weights * eval_f(cfg, i, left.points)
    return (_exp_rows(lam, left.points, 1.0) * weights[None, :]) @ _exp_rows(gamma, left.points, 1.0).T


def A2_contour_matrix(cfg: PointConfig, i: int, gamma, theta, family: ContourFamily) -> np.ndarray:
    """A2(i, gamma_k; theta_b) = int_{Gamma_1R} 1 / (f_i(v) e^{(theta + gamma) v})."""
    cfg.check_index(i)
    v = family.right_main.points
    return (_exp_rows(gamma, v, -1.0) * _v_weights(cfg, i, family)[None, :]) @ _exp_rows(theta, v, -1.0).T


def B_contour_matrix(cfg: PointConfig, i: int, gamma, j: int, gamma2, config: RunConfig) -> np.ndarray:
    """B(i, gamma; j, gamma') = int_{iR} e^{(gamma' - gamma) w} prod_{l=i+1}^{j} F_l(w), zero unless i < j."""
    cfg.check_index(i)
    cfg.check_index(j)
    gamma = np.atleast_1d(np.asarray(gamma, dtype=float))
    gamma2 = np.atleast_1d(np.asarray(gamma2, dtype=float))
    if i >= j:
        return np.zeros((len(gamma), len(gamma2)), dtype=complex)

    half_height = config.quadratic_truncation
    line = build_contour(vertical_line(0.0, half_height, config.line_nodes, panels_for(2 * half_height, LINE_PANEL)))
    weights = line.weights.copy()
    for ell in range(i + 1, j + 1):
        weights = weights * eval_F(cfg, ell, line.points)
    return (_exp_rows(gamma, line.points, -1.0) * weights[None, :]) @ _exp_rows(gamma2, line.points, 1.0).T


def A1_closed(cfg: PointConfig, i: int, lam, gamma) -> np.ndarray:
    """e^{2 a^3/3 + a(b + lam + gamma)} Ai(a^2 + b + lam + gamma)."""
    a, b = cfg.a(i), cfg.b(i)
    x = np.atleast_1d(np.asarray(lam, dtype=float))[:, None] + np.atleast_1d(np.asarray(gamma, dtype=float))[None, :]
    return np.exp(2 * a ** 3 / 3 + a * (b + x)) * airy_ai(a ** 2 + b + x)


def A2_closed(cfg: PointConfig, i: int, gamma, theta) -> np.ndarray:
    """e^{-2 a^3/3 - a(b + theta + gamma)} Ai(a^2 + b + theta + gamma)."""
    a, b = cfg.a(i), cfg.b(i)
    x = np.atleast_1d(np.asarray(gamma, dtype=float))[:, None] + np.atleast_1d(np.asarray(theta, dtype=float))[None, :]
    return np.exp(-2 * a ** 3 / 3 - a * (b + x)) * airy_ai(a ** 2 + b + x)


def B_closed(cfg: PointConfig, i: int, gamma, j: int, gamma2) -> np.ndarray:
    gamma = np.atleast_1d(np.asarray(gamma, dtype=float))[:, None]
    gamma2 = np.atleast_1d(np.asarray(gamma2, dtype=float))[None, :]
    if i >= j:
        return np.zeros((gamma.shape[0], gamma2.shape[1]))
    delta = cfg.a(j) - cfg.a(i)
    c = cfg.b(j) + gamma2 - cfg.b(i) - gamma
    return np.exp(-c ** 2 / (4 * delta)) / (2 * math.sqrt(math.pi * delta))


def chain_gamma_rule(cfg: PointConfig):
    """Panelled rule on [0, gamma_max] for the gamma variables of the decomposition."""
    lowest = min(cfg.shift(i) for i in range(1, cfg.m + 1))
    gamma_max = max(AIRY_REACH - lowest, 2.0) + (CHAIN_GAMMA_MARGIN if cfg.m > 1 else 0.0)
    return gauss_legendre(0.0, gamma_max, CHAIN_GAMMA_NODES, panels_for(gamma_max, CHAIN_GAMMA_PANEL))


def L_decomposed_matrix(cfg: PointConfig, lam, theta) -> np.ndarray:
    """
    sum_k (-1)^k sum_{i_1 < ... < i_k} A1(lam; i_1) B(i_1; i_2) ... B(i_{k-1}; i_k) A2(i_k; theta)
    with closed-form A1, B, A2 and Gauss-Legendre gamma integrals.
    """
    _check_halfline(lam, theta)
    gamma, wg = chain_gamma_rule(cfg)
    total = 0
    for k in range(1, cfg.m + 1):
        for path in itertools.combinations(range(1, cfg.m + 1), k):
            M = A1_closed(cfg, path[0], lam, gamma) * wg[None, :]
            for a, b in zip(path, path[1:]):
                M = (M @ B_closed(cfg, a, gamma, b, gamma)) * wg[None, :]
            total = total + (-1) ** k * (M @ A2_closed(cfg, path[-1], gamma, theta))
    return total


def kernel_L_decomposed(cfg: PointConfig, lam: float, theta: float) -> float:
    return float(L_decomposed_matrix(cfg, lam, theta)[0, 0])


def kernel_A1(cfg: PointConfig, lam: float, i: int, gamma: float, config: RunConfig) -> complex:
    return complex(A1_contour_matrix(cfg, i, lam, gamma, kernel_family(cfg.m, config))[0, 0])


def kernel_A2(cfg: PointConfig, i: int, gamma: float, theta: float, config: RunConfig) -> complex:
    return complex(A2_contour_matrix(cfg, i, gamma, theta, kernel_family(cfg.m, config))[0, 0])


def kernel_B_contour(cfg: PointConfig, i: int, gamma: float, j: int, gamma2: float, config: RunConfig) -> complex:
    return complex(B_contour_matrix(cfg, i, gamma, j, gamma2, config)[0, 0])


def A_contour_matrix(cfg: PointConfig, i: int, lam, j: int, theta, config: RunConfig) -> np.ndarray:
    """A(i, lam; j, theta) = int_0^inf A2(i, gamma; lam) A1(theta; j, gamma) dgamma from the contour forms."""
    _check_halfline(lam, theta)
    family = kernel_family(cfg.m, config)
    gamma, wg = chain_gamma_rule(cfg)
    A2 = A2_contour_matrix(cfg, i, gamma, lam, family)
    A1 = A1_contour_matrix(cfg, j, theta, gamma, family)
    return (A2.T * wg[None, :]) @ A1.T


def kernel_A_contour(cfg: PointConfig, i: int, lam: float, j: int, theta: float, config: RunConfig) -> complex:
    return complex(A_contour_matrix(cfg, i, lam, j, theta, config)[0, 0])


def A_raw_closed(cfg: PointConfig, i: int, lam, j: int, theta, config: RunConfig) -> np.ndarray:
    """The unconjugated A = d(i, lam) A~ / d(j, theta)."""
    strip = conjugation_weight(cfg, i, lam)[:, None] / conjugation_weight(cfg, j, theta)[None, :]
    return strip * A_tilde_block(cfg, i, lam, j, theta, config)
