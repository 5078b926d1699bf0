"""
The Airy function Ai on the real line.

Three evaluation paths:
1. airy_ai / airy_ai_prime: vectorized, through scipy.special.airy
2. airy_ai_expansion: Maclaurin series for |x| <= 5.5, asymptotic series beyond
3. airy_ai_via_contour: the contour integral of exp(-u^3/3 + x u) over a left ray pair
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np
from scipy import special as sp_special

from errors import ConvergenceError
from quadrature.contours import QuadratureContour, ContourSpec, build_contour, integrate, ray_pair, refine
from quadrature.rules import panels_for

logger = logging.getLogger(__name__)

AI_0 = 0.355028053887817239260063186004
AIP_0 = -0.258819403792806798405183560189

# top of the 3.5 <= |x| <= 5.5 overlap band; Maclaurin keeps about 1e-12 absolute there
SWITCHOVER = 5.5
CONTOUR_DIVERGENCE = 1e-8

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class AiryValue:
    x: float
    ai: float
    method: str  # series | asymptotic | contour


def airy_ai(x: ArrayLike) -> ArrayLike:
    """Ai(x), elementwise for arrays."""
    ai = sp_special.airy(x)[0]
    return float(ai) if np.ndim(ai) == 0 else ai


def airy_ai_prime(x: ArrayLike) -> ArrayLike:
    """Ai'(x), elementwise for arrays."""
    aip = sp_special.airy(x)[1]
    return float(aip) if np.ndim(aip) == 0 else aip


def airy_kernel(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """
    Classical Airy kernel (Ai(x)Ai'(y) - Ai'(x)Ai(y)) / (x - y) on a grid.

    The diagonal uses the limit Ai'(x)^2 - x Ai(x)^2.
    """
    x = np.asarray(x, dtype=float)[:, None]
    y = np.asarray(y, dtype=float)[None, :]
    ai_x, aip_x = sp_special.airy(x)[:2]
    ai_y, aip_y = sp_special.airy(y)[:2]

    diff = x - y
    close = np.abs(diff) < 1e-10
    safe = np.where(close, 1.0, diff)
    off = (ai_x * aip_y - aip_x * ai_y) / safe
    diag = aip_x * aip_y - 0.5 * (x + y) * ai_x * ai_y
    return np.where(close, diag, off)


def _maclaurin(x: float) -> float:
    # Ai(x) = Ai(0) f(x) + Ai'(0) g(x)
    x3 = x ** 3
    f_term, g_term = 1.0, x
    f_sum, g_sum = f_term, g_term
    for k in range(1, 200):
        f_term *= x3 / ((3 * k - 1) * (3 * k))
        g_term *= x3 / ((3 * k) * (3 * k + 1))
        f_sum += f_term
        g_sum += g_term
        if abs(f_term) + abs(g_term) < 1e-18 * (abs(f_sum) + abs(g_sum)):
            break
    return AI_0 * f_sum + AIP_0 * g_sum


def _asymptotic_coefficients(count: int) -> np.ndarray:
    u = np.empty(count)
    u[0] = 1.0
    for k in range(1, count):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
    return u


_U = _asymptotic_coefficients(60)


def _optimal_sum(terms: np.ndarray) -> float:
    # truncate just before the smallest term
    magnitudes = np.abs(terms)
    stop = int(np.argmin(magnitudes))
    return float(np.sum(terms[:stop + 1]))


def _asymptotic(x: float) -> float:
    if x > 0:
        zeta = 2.0 / 3.0 * x ** 1.5
        k = np.arange(len(_U))
        series = _optimal_sum(_U * (-1.0 / zeta) ** k)
        return math.exp(-zeta) / (2.0 * math.sqrt(math.pi) * x ** 0.25) * series

    y = -x
    zeta = 2.0 / 3.0 * y ** 1.5
    half = len(_U) // 2
    k = np.arange(half)
    even = _optimal_sum((-1.0) ** k * _U[0::2][:half] / zeta ** (2 * k))
    odd = _optimal_sum((-1.0) ** k * _U[1::2][:half] / zeta ** (2 * k + 1))
    phase = zeta - math.pi / 4
    return (math.cos(phase) * even + math.sin(phase) * odd) / (math.sqrt(math.pi) * y ** 0.25)


def airy_ai_expansion(x: float) -> AiryValue:
    """
    Ai(x) from the Maclaurin series (|x| <= 5.5) or the asymptotic expansions.

    The asymptotic branch is accurate to roughly its smallest term,
    exp(-4|x|^{3/2}/3) relative, so it is a reference for large |x| only.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"Airy argument must be finite, got {x}")
    if abs(x) <= SWITCHOVER:
        return AiryValue(x, _maclaurin(x), "series")
    return AiryValue(x, _asymptotic(x), "asymptotic")


def airy_contour_spec(x: float, nodes: int = 48, truncation: float = 8.0) -> ContourSpec:
    """
    Left ray pair through the saddle points of exp(-u^3/3 + x u).

    For x >= 1 the apex sits on the saddle -sqrt(x); for x <= -1 the rays pass
    through the saddles +-i sqrt(-x); in between the apex is -1.
    """
    if x >= 1.0:
        apex = -math.sqrt(x)
    elif x <= -1.0:
        apex = math.sqrt(-x / 3.0)
    else:
        apex = -1.0
    segments = panels_for(truncation, 2.0)
    return ray_pair(apex, 2 * math.pi / 3, truncation, nodes, segments)


def airy_ai_via_contour(x: float, qc: Optional[QuadratureContour] = None) -> complex:
    """
    Ai(x) as the integral of exp(-u^3/3 + x u) du / (2 pi i) over a left ray pair.

    Args:
        x: real argument.
        qc: a built left ray pair; defaults to airy_contour_spec(x).

    Raises:
        ValueError: if qc is not a left ray pair.
        ConvergenceError: if doubling the nodes moves the value by more than 1e-8.
    """
    spec = airy_contour_spec(x) if qc is None else qc.spec
    if not spec.is_left:
        raise ValueError(f"Airy contour must be a left ray pair, got {spec.kind.value} at angle {spec.angle}")
    contour = build_contour(spec) if qc is None else qc

    def integrand(u):
        return np.exp(-u ** 3 / 3.0 + x * u)

    value = integrate(contour, integrand)
    check = integrate(build_contour(refine(spec)), integrand)
    if abs(check - value) > CONTOUR_DIVERGENCE:
        raise ConvergenceError(f"Airy contour integral at x={x} not converged: refinement change {abs(check - value):.3e}")
    return value


def airy_value_via_contour(x: float, qc: Optional[QuadratureContour] = None) -> AiryValue:
    return AiryValue(float(x), airy_ai_via_contour(x, qc).real, "contour")
