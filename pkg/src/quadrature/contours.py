"""
Discretized complex contours.

This module provides:
1. ContourSpec, the description of a ray pair, a vertical line or a circle
2. build_contour, which turns a spec into nodes and complex weights
3. integrate / integrate_with_estimate over a built contour

Weights carry the d(zeta) direction factor and, when the ContourSpec is normalized,
the 1/(2*pi*i) measure, so a contour integral is a plain dot product.
"""

import dataclasses
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Tuple

import numpy as np

from errors import NonFiniteIntegrandError
from quadrature.rules import gauss_legendre

logger = logging.getLogger(__name__)

TWO_PI_I = 2j * math.pi


class ContourKind(str, Enum):
    RAY_PAIR = "ray_pair"
    VERTICAL_LINE = "vertical_line"
    CIRCLE = "circle"


class Orientation(str, Enum):
    UPWARD = "upward"
    COUNTERCLOCKWISE = "counterclockwise"


@dataclass(frozen=True)
class ContourSpec:
    """
    Generating data of a quadrature contour.

    vertex is the ray-pair apex, the line anchor or the circle center.
    angle is the half-opening angle of a ray pair (2*pi/3 for left contours,
    pi/5 or pi/3 for right ones). truncation is the arc length per ray, the
    half-height of a line, or the circle radius.
    """
    kind: ContourKind
    vertex: complex
    angle: float = 0.0
    truncation: float = 8.0
    nodes_per_segment: int = 48
    orientation: Orientation = Orientation.UPWARD
    segments: int = 1
    normalized: bool = True

    def __post_init__(self):
        if not self.truncation > 0:
            raise ValueError(f"truncation must be positive, got {self.truncation}")
        if self.nodes_per_segment < 2:
            raise ValueError(f"nodes_per_segment must be at least 2, got {self.nodes_per_segment}")
        if self.segments < 1:
            raise ValueError(f"segments must be at least 1, got {self.segments}")
        if self.kind == ContourKind.RAY_PAIR:
            if not (0 < self.angle < math.pi) or math.isclose(self.angle, math.pi / 2):
                raise ValueError(f"ray_pair angle must lie in (0, pi/2) or (pi/2, pi), got {self.angle}")
            if self.orientation != Orientation.UPWARD:
                raise ValueError("ray_pair contours are oriented upward")
        if self.kind == ContourKind.VERTICAL_LINE and self.orientation != Orientation.UPWARD:
            raise ValueError("vertical lines are oriented upward")
        if self.kind == ContourKind.CIRCLE and self.orientation != Orientation.COUNTERCLOCKWISE:
            raise ValueError("circles are oriented counterclockwise")

    @property
    def is_left(self) -> bool:
        return self.kind == ContourKind.RAY_PAIR and self.angle > math.pi / 2

    @property
    def is_right(self) -> bool:
        return self.kind == ContourKind.RAY_PAIR and self.angle < math.pi / 2


@dataclass(frozen=True)
class QuadratureContour:
    points: np.ndarray
    weights: np.ndarray
    spec: ContourSpec

    def __post_init__(self):
        if len(self.points) == 0 or len(self.points) != len(self.weights):
            raise ValueError(f"points/weights mismatch: {len(self.points)} vs {len(self.weights)}")

    def __len__(self) -> int:
        return len(self.points)


def ray_pair(vertex: complex, angle: float, truncation: float, nodes: int, segments: int = 1) -> ContourSpec:
    return ContourSpec(ContourKind.RAY_PAIR, complex(vertex), angle, truncation, nodes, Orientation.UPWARD, segments)


def vertical_line(vertex: complex, half_height: float, nodes: int, segments: int = 1) -> ContourSpec:
    return ContourSpec(ContourKind.VERTICAL_LINE, complex(vertex), 0.0, half_height, nodes, Orientation.UPWARD, segments)


def circle(center: complex, radius: float, nodes: int) -> ContourSpec:
    return ContourSpec(ContourKind.CIRCLE, complex(center), 0.0, radius, nodes, Orientation.COUNTERCLOCKWISE)


def build_contour(spec: ContourSpec) -> QuadratureContour:
    """
    Discretize a contour.

    ray_pair: Gauss-Legendre on [0, truncation] per ray, traversed from the
    lower ray (coming in from infinity) to the upper ray (going out).
    vertical_line: Gauss-Legendre on [vertex - i*T, vertex + i*T], upward.
    circle: equispaced trapezoid nodes, counterclockwise.
    """
    if spec.kind == ContourKind.RAY_PAIR:
        r, w = gauss_legendre(0.0, spec.truncation, spec.nodes_per_segment, spec.segments)
        up = np.exp(1j * spec.angle)
        down = np.conj(up)
        lower_points = spec.vertex + r[::-1] * down
        lower_weights = -down * w[::-1]
        upper_points = spec.vertex + r * up
        upper_weights = up * w
        points = np.concatenate([lower_points, upper_points])
        weights = np.concatenate([lower_weights, upper_weights])
    elif spec.kind == ContourKind.VERTICAL_LINE:
        t, w = gauss_legendre(-spec.truncation, spec.truncation, spec.nodes_per_segment, spec.segments)
        points = spec.vertex + 1j * t
        weights = 1j * w
    else:
        n = spec.nodes_per_segment
        offsets = spec.truncation * np.exp(2j * math.pi * np.arange(n) / n)
        points = spec.vertex + offsets
        weights = 1j * offsets * (2 * math.pi / n)

    if spec.normalized:
        weights = weights / TWO_PI_I

    return QuadratureContour(points.astype(complex), weights.astype(complex), spec)


def refine(spec: ContourSpec) -> ContourSpec:
    """The same contour with twice the nodes per segment."""
    return dataclasses.replace(spec, nodes_per_segment=2 * spec.nodes_per_segment)


def reverse(qc: QuadratureContour) -> QuadratureContour:
    """Traverse the contour backwards."""
    return QuadratureContour(qc.points, -qc.weights, qc.spec)


def is_right_of(points, spec: ContourSpec) -> np.ndarray:
    """
    Elementwise: does the point lie in the open region to the right of the ray pair?

    That region is the sector |arg(p - vertex)| < angle, for left and right
    ray pairs alike.
    """
    if spec.kind != ContourKind.RAY_PAIR:
        raise ValueError(f"Side tests need a ray pair, got {spec.kind.value}")
    d = np.asarray(points, dtype=complex) - spec.vertex
    return (np.abs(d) > 0) & (np.abs(np.angle(d)) < spec.angle)


def integrate(qc: QuadratureContour, f: Callable[[np.ndarray], np.ndarray]) -> complex:
    """
    Sum of weights * f(points).

    f is called once with the whole node array.

    Raises:
        NonFiniteIntegrandError: at the first node where f is not finite.
    """
    values = np.broadcast_to(np.asarray(f(qc.points), dtype=complex), qc.points.shape)
    bad = ~np.isfinite(values)
    if bad.any():
        k = int(np.argmax(bad))
        raise NonFiniteIntegrandError(complex(qc.points[k]), complex(values[k]))
    return complex(np.dot(qc.weights, values))


def integrate_with_estimate(spec: ContourSpec, f: Callable[[np.ndarray], np.ndarray]) -> Tuple[complex, float]:
    """Integrate at n and 2n nodes; return the fine value and |I(2n) - I(n)|."""
    coarse = integrate(build_contour(spec), f)
    fine = integrate(build_contour(refine(spec)), f)
    error = abs(fine - coarse)
    logger.debug(f"{spec.kind.value} at vertex {spec.vertex}: refinement change {error:.3e}")
    return fine, error
