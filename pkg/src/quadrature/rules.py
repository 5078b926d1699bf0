"""Gauss-Legendre rules on real intervals, single or composite."""

from functools import lru_cache
from typing import Tuple

import numpy as np


@lru_cache(maxsize=64)
def _legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def gauss_legendre(a: float, b: float, n: int, segments: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre rule on [a, b].

    Args:
        a: left end.
        b: right end, b > a.
        n: nodes per panel.
        segments: number of equal panels.

    Returns:
        (nodes, weights), nodes increasing.
    """
    if not b > a:
        raise ValueError(f"Empty interval [{a}, {b}]")
    if n < 1 or segments < 1:
        raise ValueError(f"Need n >= 1 and segments >= 1, got n={n}, segments={segments}")

    x, w = _legendre(n)
    edges = np.linspace(a, b, segments + 1)
    half = 0.5 * np.diff(edges)
    center = 0.5 * (edges[1:] + edges[:-1])

    nodes = (center[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def panels_for(length: float, panel_length: float) -> int:
    """Number of equal panels no longer than panel_length covering length."""
    return max(1, int(np.ceil(length / panel_length - 1e-12)))
