import dataclasses
import math
import os
from dataclasses import dataclass
from typing import Dict, Mapping, Optional

ENV_PREFIX = "AF_"

# environment variable suffix -> (RunConfig field, parser)
ENV_FIELDS = {
    "NODES": ("ray_nodes", int),
    "TRUNCATION": ("truncation", float),
    "LAMBDA_MAX": ("lambda_max", float),
    "Z_RADIUS": ("z_radius", float),
    "TOL": ("tol", float),
    "WORKERS": ("workers", int),
}


@dataclass(frozen=True)
class RunConfig:
    """
    Every quadrature parameter of a run.

    Attributes:
        ray_nodes: Gauss-Legendre nodes per ray for single-panel contours.
        truncation: arc-length cutoff for cubic-decay rays; quadratic-decay
            rays and vertical lines use 1.5 times this value.
        line_nodes: nodes per vertical line.
        circle_nodes: trapezoid nodes per z-circle.
        z_radius: radius of the z-circles.
        lambda_max: right end of the truncated half line (0, lambda_max].
        halfline_nodes: Nystrom nodes per point index on the half line.
        gamma_nodes: nodes for the gamma integrals of the Airy-product kernels.
        panel_length: panel length on nested contour families.
        panel_nodes: Gauss-Legendre nodes per panel on nested families.
        tol: tolerance used by checks and convergence reporting.
        workers: thread pool size for sweeps and suites.
        strict: raise ConvergenceError instead of logging a warning.
    """
    ray_nodes: int = 48
    truncation: float = 8.0
    line_nodes: int = 64
    circle_nodes: int = 32
    z_radius: float = 0.5
    lambda_max: float = 18.0
    halfline_nodes: int = 64
    gamma_nodes: int = 96
    panel_length: float = 0.5
    panel_nodes: int = 12
    left_angle: float = 2 * math.pi / 3
    right_angle: float = math.pi / 5
    kernel_right_angle: float = math.pi / 3
    tol: float = 1e-6
    workers: int = 4
    strict: bool = False

    def __post_init__(self):
        for name in ("ray_nodes", "line_nodes", "circle_nodes", "halfline_nodes", "gamma_nodes", "panel_nodes"):
            if getattr(self, name) < 2:
                raise ValueError(f"{name} must be at least 2, got {getattr(self, name)}")
        for name in ("truncation", "lambda_max", "panel_length", "tol"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if not 0 < self.z_radius < 1:
            raise ValueError(f"z_radius must lie in (0, 1), got {self.z_radius}")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}")

    @property
    def quadratic_truncation(self) -> float:
        return 1.5 * self.truncation

    def refined(self) -> "RunConfig":
        """The same run with every node count doubled."""
        return dataclasses.replace(
            self,
            ray_nodes=2 * self.ray_nodes,
            line_nodes=2 * self.line_nodes,
            circle_nodes=2 * self.circle_nodes,
            halfline_nodes=2 * self.halfline_nodes,
            gamma_nodes=2 * self.gamma_nodes,
            panel_nodes=2 * self.panel_nodes,
        )

    def snapshot(self) -> Dict[str, object]:
        return dataclasses.asdict(self)


def load_config(overrides: Optional[Mapping[str, object]] = None,
                environ: Optional[Mapping[str, str]] = None) -> RunConfig:
    """
    Build the effective RunConfig.

    Precedence is flag > environment variable (AF_ prefix) > default.

    Parameters:
    - overrides (Mapping): field values taken from command-line flags; None entries are ignored.
    - environ (Mapping): environment to read, defaults to os.environ.

    Returns:
    - RunConfig: the validated configuration.
    """
    environ = os.environ if environ is None else environ
    values: Dict[str, object] = {}

    for suffix, (field, parse) in ENV_FIELDS.items():
        raw = environ.get(ENV_PREFIX + suffix)
        if raw is None or raw == "":
            continue
        try:
            values[field] = parse(raw)
        except ValueError:
            raise ValueError(f"Malformed value for {ENV_PREFIX + suffix}: {raw!r}")

    for field, value in (overrides or {}).items():
        if value is not None:
            values[field] = value

    return RunConfig(**values)
