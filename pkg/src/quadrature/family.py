"""
The nested contour families used by the m-point kernels.

Left contours, ordered left to right:
    in_m, ..., in_2, main (Gamma_1L), out_2, ..., out_m
Right contours, ordered right to left:
    in_m, ..., in_2, main (Gamma_1R), out_2, ..., out_m

All rays of one side share the same angle, so ordering the apexes on the real
axis is enough to rule out crossings.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Optional

from errors import ContourOrderingError
from quadrature.contours import QuadratureContour, build_contour, ray_pair
from quadrature.rules import panels_for
from utils import RunConfig

logger = logging.getLogger(__name__)

LEFT_APEX = -1.0
RIGHT_APEX = 1.0
IN_SPACING = 0.6
OUT_SPACING = 0.4


def left_apex(i: int, which: str) -> float:
    if i == 1:
        return LEFT_APEX
    step = IN_SPACING if which == "in" else OUT_SPACING
    sign = -1.0 if which == "in" else 1.0
    return LEFT_APEX + sign * step * (i - 1)


def right_apex(i: int, which: str) -> float:
    if i == 1:
        return RIGHT_APEX
    step = IN_SPACING if which == "in" else OUT_SPACING
    sign = 1.0 if which == "in" else -1.0
    return RIGHT_APEX + sign * step * (i - 1)


@dataclass(frozen=True)
class ContourFamily:
    m: int
    left_main: QuadratureContour
    right_main: QuadratureContour
    left_in: Dict[int, QuadratureContour] = field(default_factory=dict)
    left_out: Dict[int, QuadratureContour] = field(default_factory=dict)
    right_in: Dict[int, QuadratureContour] = field(default_factory=dict)
    right_out: Dict[int, QuadratureContour] = field(default_factory=dict)

    def left(self, i: int, which: str = "in") -> QuadratureContour:
        """Gamma_{i,L}^{which}; i = 1 is Gamma_1L for both sides."""
        if i == 1:
            return self.left_main
        return (self.left_in if which == "in" else self.left_out)[i]

    def right(self, i: int, which: str = "out") -> QuadratureContour:
        """Gamma_{i,R}^{which}; i = 1 is Gamma_1R for both sides."""
        if i == 1:
            return self.right_main
        return (self.right_in if which == "in" else self.right_out)[i]


def validate_ordering(m: int, kernel_only: bool = False) -> None:
    """
    Check the apex ordering of the 4m-2 contours (or, with kernel_only, of
    Gamma_1L, the inner left contours and Gamma_1R).

    Raises:
        ContourOrderingError: if any contour leaves its half plane or two
            neighbours swap.
    """
    if m < 1:
        raise ContourOrderingError(f"Contour families need m >= 1, got {m}")
    outs = [] if kernel_only else [left_apex(i, "out") for i in range(2, m + 1)]
    left = [left_apex(i, "in") for i in range(m, 1, -1)] + [LEFT_APEX] + outs
    if any(b <= a for a, b in zip(left, left[1:])) or left[-1] >= 0:
        raise ContourOrderingError(f"Left contours out of order or crossing iR for m={m}: apexes {left}")
    if kernel_only:
        return

    right = [right_apex(i, "in") for i in range(m, 1, -1)] + [RIGHT_APEX] + [right_apex(i, "out") for i in range(2, m + 1)]
    if any(b >= a for a, b in zip(right, right[1:])) or right[-1] <= 0:
        raise ContourOrderingError(f"Right contours out of order or crossing iR for m={m}: apexes {right}")


def build_family(m: int, config: RunConfig, right_angle: Optional[float] = None,
                 panel_nodes: Optional[int] = None, kernel_only: bool = False) -> ContourFamily:
    """
    Build the panelled contour family for m points.

    Args:
        m: number of points.
        config: quadrature parameters (truncations, panel length and nodes).
        right_angle: half-opening angle of the right contours; defaults to
            config.right_angle. Angles below pi/4 make 1/F_i decay on every
            right contour; pi/3 is enough where only 1/f_i appears.
        panel_nodes: override of config.panel_nodes (refinement runs).
        kernel_only: build only Gamma_1L, Gamma_{i,L}^in and Gamma_1R, which
            is all the kernels K and L use; no upper bound on m then applies.

    Returns:
        ContourFamily
    """
    validate_ordering(m, kernel_only)
    angle = config.right_angle if right_angle is None else right_angle
    nodes = config.panel_nodes if panel_nodes is None else panel_nodes
    cubic = config.truncation
    quadratic = config.quadratic_truncation
    # rays at pi/5 carrying 1/f_i climb before the cubic decay wins
    right_main_truncation = cubic if angle >= math.pi / 4 else quadratic

    def make(apex: float, contour_angle: float, truncation: float) -> QuadratureContour:
        segments = panels_for(truncation, config.panel_length)
        return build_contour(ray_pair(apex, contour_angle, truncation, nodes, segments))

    nested = range(2, m + 1)
    family = ContourFamily(
        m=m,
        left_main=make(LEFT_APEX, config.left_angle, cubic),
        right_main=make(RIGHT_APEX, angle, right_main_truncation),
        left_in={i: make(left_apex(i, "in"), config.left_angle, quadratic) for i in nested},
        left_out={} if kernel_only else {i: make(left_apex(i, "out"), config.left_angle, quadratic) for i in nested},
        right_in={} if kernel_only else {i: make(right_apex(i, "in"), angle, quadratic) for i in nested},
        right_out={} if kernel_only else {i: make(right_apex(i, "out"), angle, quadratic) for i in nested},
    )
    logger.debug(f"Built contour family m={m}: {len(family.left_main)} nodes on Gamma_1L, "
                 f"{len(family.right_main)} on Gamma_1R")
    return family
