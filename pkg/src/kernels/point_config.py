from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

import numpy as np

from errors import InvalidPointsError


@dataclass(frozen=True)
class PointConfig:
    """
    The m spatial points (alpha_i, beta_i) of a joint distribution.

    alpha must be strictly increasing; all time parameters are fixed to 1.
    """
    alpha: Tuple[float, ...]
    beta: Tuple[float, ...]

    def __post_init__(self):
        alpha = tuple(float(a) for a in self.alpha)
        beta = tuple(float(b) for b in self.beta)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

        if not alpha:
            raise InvalidPointsError("At least one point is required")
        if len(alpha) != len(beta):
            raise InvalidPointsError(f"alpha and beta lengths differ: {len(alpha)} vs {len(beta)}")
        if not all(np.isfinite(alpha)) or not all(np.isfinite(beta)):
            raise InvalidPointsError(f"Point coordinates must be finite: alpha={alpha}, beta={beta}")
        if any(b <= a for a, b in zip(alpha, alpha[1:])):
            raise InvalidPointsError(f"alpha must be strictly increasing, got {list(alpha)}")

    @property
    def m(self) -> int:
        return len(self.alpha)

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise IndexError(f"Point index {i} out of range 1..{self.m}")

    def a(self, i: int) -> float:
        return self.alpha[i - 1]

    def b(self, i: int) -> float:
        return self.beta[i - 1]

    def shift(self, i: int) -> float:
        """beta_i + alpha_i^2, the offset where the Airy argument of point i starts."""
        return self.beta[i - 1] + self.alpha[i - 1] ** 2

    def with_beta(self, i: int, value: float) -> "PointConfig":
        beta = list(self.beta)
        beta[i - 1] = value
        return PointConfig(self.alpha, tuple(beta))

    def label(self) -> str:
        return ",".join(f"{a:g}:{b:g}" for a, b in zip(self.alpha, self.beta))


def from_pairs(pairs: Iterable[Sequence[float]]) -> PointConfig:
    pairs = list(pairs)
    return PointConfig(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))


def parse_points(text: str) -> PointConfig:
    """
    Parse "alpha:beta,alpha:beta,...".

    Raises:
        InvalidPointsError: on malformed pairs or non-increasing alpha.
    """
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        parts = chunk.split(":")
        if len(parts) != 2:
            raise InvalidPointsError(f"Malformed point {chunk!r}: expected alpha:beta")
        try:
            pairs.append((float(parts[0]), float(parts[1])))
        except ValueError:
            raise InvalidPointsError(f"Malformed point {chunk!r}: alpha and beta must be numbers")
    return from_pairs(pairs)
