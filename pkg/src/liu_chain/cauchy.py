"""Cauchy determinants det[1 / (w_i - w~_j)] and vector conjunction."""

from typing import Sequence, Tuple

import numpy as np

from fredholm.lu import det_lu

ComplexVector = Tuple[complex, ...]


def conjoin(*vectors: Sequence[complex]) -> ComplexVector:
    """W1 u W2 u ...: the entries of each vector, in order."""
    return tuple(complex(w) for vector in vectors for w in vector)


def _validate(W: Sequence[complex], Wt: Sequence[complex]) -> Tuple[np.ndarray, np.ndarray]:
    W = np.asarray(W, dtype=complex)
    Wt = np.asarray(Wt, dtype=complex)
    if W.shape != Wt.shape or W.ndim != 1:
        raise ValueError(f"Cauchy determinant needs vectors of equal length, got {W.shape} and {Wt.shape}")
    if np.any(W[:, None] == Wt[None, :]):
        raise ValueError("Cauchy determinant entries coincide: some w_i equals some w~_j")
    return W, Wt


def cauchy_det(W: Sequence[complex], Wt: Sequence[complex]) -> complex:
    """
    C(W; W~) from the closed product form

        (-1)^{n(n-1)/2} prod_{i<j} (w_j - w_i)(w~_j - w~_i) / prod_{i,j} (w_j - w~_i)

    Raises:
        ValueError: on a dimension mismatch or coincident entries.
    """
    W, Wt = _validate(W, Wt)
    n = len(W)
    if n == 0:
        return 1.0 + 0.0j
    upper = np.triu_indices(n, k=1)
    numerator = np.prod((W[upper[1]] - W[upper[0]]) * (Wt[upper[1]] - Wt[upper[0]]))
    denominator = np.prod(W[None, :] - Wt[:, None])
    sign = -1.0 if (n * (n - 1) // 2) % 2 else 1.0
    return complex(sign * numerator / denominator)


def cauchy_det_direct(W: Sequence[complex], Wt: Sequence[complex]) -> complex:
    """The same determinant through LU on the Cauchy matrix."""
    W, Wt = _validate(W, Wt)
    if len(W) == 0:
        return 1.0 + 0.0j
    return det_lu(1.0 / (W[:, None] - Wt[None, :]))
