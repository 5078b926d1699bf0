"""
int_R e^{xz} Ai(z + a) Ai(z + b) dz = exp(x^3/12 - (a+b)x/2 - (a-b)^2/(4x)) / (2 sqrt(pi x)),  x > 0.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from quadrature.rules import gauss_legendre, panels_for
from special.airy import airy_ai

logger = logging.getLogger(__name__)

LEFT_TAIL = 1e-18
RIGHT_DECAY = 45.0
PANEL_LENGTH = 0.5
PANEL_NODES = 16


@dataclass(frozen=True)
class GaussianAiryPair:
    x: float
    a: float
    b: float
    integral: float
    closed_form: float

    @property
    def deviation(self) -> float:
        return abs(self.integral - self.closed_form)


def closed_form(x: float, a: float, b: float) -> float:
    if not x > 0:
        raise ValueError(f"The Gaussian-Airy identity needs x > 0, got {x}")
    return math.exp(x ** 3 / 12 - (a + b) * x / 2 - (a - b) ** 2 / (4 * x)) / (2 * math.sqrt(math.pi * x))


def left_limit(x: float, a: float, b: float, tail: float = LEFT_TAIL) -> float:
    """Where e^{xz} times the oscillation envelope |z|^{-1/2}/pi drops below tail."""
    return -math.log(1.0 / tail) / x - max(abs(a), abs(b))


def right_limit(x: float, a: float, b: float) -> float:
    """First z with 4/3 (z + min(a, b))^{3/2} - x z above RIGHT_DECAY."""
    shift = min(a, b)
    z = max(1.0, 1.0 - shift)
    while 4.0 / 3.0 * (z + shift) ** 1.5 - x * z < RIGHT_DECAY:
        z += 0.5
    return z


def gaussian_airy_integral(x: float, a: float, b: float, left: Optional[float] = None,
                           right: Optional[float] = None) -> float:
    """Composite Gauss-Legendre on [left, right] with panels of length 0.5."""
    if not x > 0:
        raise ValueError(f"The Gaussian-Airy identity needs x > 0, got {x}")
    left = left_limit(x, a, b) if left is None else left
    right = right_limit(x, a, b) if right is None else right
    z, w = gauss_legendre(left, right, PANEL_NODES, panels_for(right - left, PANEL_LENGTH))
    return float(np.sum(w * np.exp(x * z) * airy_ai(z + a) * airy_ai(z + b)))


def okounkov_pair(x: float, a: float, b: float) -> GaussianAiryPair:
    """
    The Gaussian-Airy integral by quadrature next to its closed form.

    Raises:
        ValueError: if x <= 0.
    """
    value = gaussian_airy_integral(x, a, b)
    pair = GaussianAiryPair(float(x), float(a), float(b), value, closed_form(x, a, b))
    logger.debug(f"Gaussian-Airy at x={x:g}, a={a:g}, b={b:g}: deviation {pair.deviation:.2e}")
    return pair
