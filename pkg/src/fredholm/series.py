"""
Truncated series expansions of det(I + K) for the contour kernel.

On a fixed node set the k-fold term (1/k!) int det[K] equals the k-th
elementary symmetric function of the eigenvalues of the Nystrom matrix
K diag(w), so all partial sums come from one eigendecomposition. The
grouped terms (k_1, ..., k_m) are the coefficients of prod t_i^{k_i} in
det(I + diag(t) K diag(w)), extracted with a polycircle DFT.
"""

import itertools
import logging
import math
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np
from scipy import linalg

from errors import CostGuardError
from fredholm.lu import det_lu
from fredholm.nystrom import contour_nystrom_matrix
from fredholm.results import FredholmResult
from kernels.point_config import PointConfig
from utils import RunConfig

logger = logging.getLogger(__name__)

MAX_SERIES_ORDER = 6
MAX_GROUPED_ORDER = 6
MAX_MINORS = 200_000
MIN_CIRCLE_POINTS = 16
MAX_CIRCLE_POINTS = 32


def elementary_symmetric(values: np.ndarray, k_max: int) -> np.ndarray:
    """e_0, ..., e_{k_max} of the given numbers."""
    e = np.zeros(k_max + 1, dtype=complex)
    e[0] = 1.0
    for x in values:
        e[1:] = e[1:] + x * e[:-1]
    return e


def series_terms(cfg: PointConfig, config: RunConfig, k_max: int) -> np.ndarray:
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    if k_max > MAX_SERIES_ORDER:
        raise CostGuardError(f"Series order {k_max} above the cost guard {MAX_SERIES_ORDER}")
    if k_max == 0:
        return np.ones(1, dtype=complex)
    eigenvalues = linalg.eigvals(contour_nystrom_matrix(cfg, config))
    return elementary_symmetric(eigenvalues, k_max)


def series_term_by_minors(cfg: PointConfig, config: RunConfig, k: int) -> complex:
    """
    The k-fold term (1/k!) sum over node tuples of det[K w], summed directly.

    Tuples with a repeated node contribute zero and the determinant is
    symmetric under reordering, so this is the sum of the k x k principal
    minors of the Nystrom matrix.

    Raises:
        CostGuardError: if there are more than MAX_MINORS minors.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k == 0:
        return 1.0 + 0.0j
    KW = contour_nystrom_matrix(cfg, config)
    n = KW.shape[0]
    count = math.comb(n, k)
    if count > MAX_MINORS:
        raise CostGuardError(f"{count} minors of order {k} above the cost guard {MAX_MINORS}")
    tuples = np.array(list(itertools.combinations(range(n), k)))
    minors = KW[tuples[:, :, None], tuples[:, None, :]]
    logger.debug(f"Order-{k} series term at {cfg.label()} from {count} minors")
    return complex(np.sum(np.linalg.det(minors)))


def fredholm_det_contour_series(cfg: PointConfig, config: RunConfig, k_max: int) -> FredholmResult:
    """
    Partial sums S_0, ..., S_{k_max} of the Fredholm series of det(I + K).

    Raises:
        CostGuardError: if k_max > 6.
    """
    terms = series_terms(cfg, config, k_max)
    sums = np.cumsum(terms)
    # the empty term is 1 exactly, not a rounded eigenvalue product
    sums[0] = 1.0
    result = FredholmResult.from_history((k, s) for k, s in enumerate(sums))
    logger.info(f"Series of det(I + K) at {cfg.label()} to order {k_max}: {result.real:.12g}")
    return result


def _circle_points(orders: Sequence[Tuple[int, ...]]) -> int:
    highest = max(max(k) for k in orders)
    return int(min(MAX_CIRCLE_POINTS, max(MIN_CIRCLE_POINTS, 2 * highest + 8)))


def grouped_series_terms(cfg: PointConfig, orders: Iterable[Sequence[int]],
                         config: RunConfig) -> Dict[Tuple[int, ...], complex]:
    """
    Terms (1/prod k_i!) int det[K(i, u^(i); j, u^(j))] of the grouped series.

    Args:
        cfg: the points.
        orders: multi-indices (k_1, ..., k_m).
        config: quadrature parameters.

    Returns:
        {(k_1, ..., k_m): term}

    Raises:
        CostGuardError: if any k_i exceeds 6.
    """
    orders = [tuple(int(k) for k in order) for order in orders]
    for order in orders:
        if len(order) != cfg.m or min(order) < 0:
            raise ValueError(f"Grouped order {order} does not match m={cfg.m}")
        if max(order) > MAX_GROUPED_ORDER:
            raise CostGuardError(f"Grouped order {order} above the cost guard {MAX_GROUPED_ORDER}")

    KW = contour_nystrom_matrix(cfg, config)
    n = KW.shape[0] // cfg.m
    N = _circle_points(orders)
    roots = np.exp(2j * np.pi * np.arange(N) / N)

    samples = np.empty((N,) * cfg.m, dtype=complex)
    identity = np.eye(KW.shape[0])
    for index in itertools.product(range(N), repeat=cfg.m):
        scale = np.repeat(roots[list(index)], n)
        samples[index] = det_lu(identity + scale[:, None] * KW)

    coefficients = np.fft.fftn(samples) / N ** cfg.m
    logger.debug(f"Grouped series at {cfg.label()}: {N}^{cfg.m} determinant samples")
    return {order: complex(coefficients[order]) for order in orders}
