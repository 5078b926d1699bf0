"""
The equal-time multipoint formula as a sum over multi-indices n.

    P(A(alpha_i) <= beta_i for all i) = sum_n hat_D_n / (n_1! ... n_m!)^2

hat_D_n is the z-circle integral of the term D_n(z). It is evaluated here
four ways: from D_n itself, and from each of its three simplified forms
(in/out contours collapsed at z = 0; the right variables moved onto
Gamma_1R; the left chains folded into the kernels h_i). All four must agree,
and the last one is what the sum uses.
"""

import itertools
import logging
import math
import tqdm
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from errors import CostGuardError
from fredholm.results import FredholmResult
from fredholm.series import grouped_series_terms
from kernels.contour import h_matrix
from kernels.point_config import PointConfig
from kernels.scalar import eval_F, eval_f
from liu_chain.leibniz import DeterminantFactor, Variable, leibniz_integral
from liu_chain.multi_index import MultiIndex, enumerate_indices
from quadrature.contours import QuadratureContour
from quadrature.family import ContourFamily, build_family
from utils import RunConfig

logger = logging.getLogger(__name__)

MAX_CUTOFF = 3

Counts = Tuple[int, ...]


class Stage(str, Enum):
    LEMMA22I = "lemma22i"
    LEMMA22II = "lemma22ii"
    LEMMA23 = "lemma23"


@lru_cache(maxsize=16)
def chain_family(m: int, config: RunConfig) -> ContourFamily:
    """All 4m - 2 contours, right ones at config.right_angle."""
    return build_family(m, config)


def _check_index(cfg: PointConfig, n: MultiIndex) -> None:
    if n.m != cfg.m:
        raise ValueError(f"MultiIndex {n} has {n.m} entries but the configuration has m={cfg.m}")


def _left_variable(cfg: PointConfig, family: ContourFamily, name: str, i: int, which: str,
                   weight_index: Optional[int] = None) -> Variable:
    """A variable on Gamma_{i,L}^which carrying F_i (or only the weights when weight_index is 0)."""
    qc = family.left(i, which)
    label = "L1" if i == 1 else f"L{which}{i}"
    j = i if weight_index is None else weight_index
    weights = qc.weights if j == 0 else qc.weights * eval_F(cfg, j, qc.points)
    return Variable(name, label, qc.points, weights)


def _right_variable(qc: QuadratureContour, label: str, name: str, factor: np.ndarray) -> Variable:
    return Variable(name, label, qc.points, qc.weights / factor)


def _right_F_variable(cfg: PointConfig, family: ContourFamily, name: str, i: int, which: str) -> Variable:
    qc = family.right(i, which)
    label = "R1" if i == 1 else f"R{which}{i}"
    return _right_variable(qc, label, name, eval_F(cfg, i, qc.points))


def _right_f_variable(cfg: PointConfig, family: ContourFamily, name: str, i: int) -> Variable:
    """A variable on Gamma_1R carrying 1/f_i."""
    qc = family.right_main
    return _right_variable(qc, "R1", name, eval_f(cfg, i, qc.points))


def _chain_factors(U: Dict[int, List[Variable]], V: Dict[int, List[Variable]], m: int) -> List[DeterminantFactor]:
    """C(V1; U1) prod_i C(U_i u V_{i+1}; V_i u U_{i+1}) with U_{m+1}, V_{m+1} empty."""
    U = {**U, m + 1: []}
    V = {**V, m + 1: []}
    factors = [DeterminantFactor(V[1], U[1])]
    for i in range(1, m + 1):
        factors.append(DeterminantFactor(U[i] + V[i + 1], V[i] + U[i + 1]))
    return factors


def _direct_integral(cfg: PointConfig, n: MultiIndex, family: ContourFamily, cu: Counts, cv: Counts) -> complex:
    """
    The D_n integral with, for each i >= 2, the first cu[i-2] of the u^(i)
    on Gamma_{i,L}^in and the rest on Gamma_{i,L}^out, likewise cv for v^(i).
    """
    U: Dict[int, List[Variable]] = {}
    V: Dict[int, List[Variable]] = {}
    for i, n_i in enumerate(n.n, start=1):
        in_u = n_i if i == 1 else cu[i - 2]
        in_v = n_i if i == 1 else cv[i - 2]
        U[i] = [_left_variable(cfg, family, f"u{i}_{l}", i, "in" if l < in_u else "out") for l in range(n_i)]
        V[i] = [_right_F_variable(cfg, family, f"v{i}_{l}", i, "in" if l < in_v else "out") for l in range(n_i)]
    return leibniz_integral(_chain_factors(U, V, n.m))


@dataclass(frozen=True)
class DirectExpansion:
    """
    D_n(z) with every contour integral already done.

    integrals maps the in-counts (cu, cv) of the groups i >= 2 to the
    integral with that assignment; D_n(z) is then a rational function of z.
    """
    n: MultiIndex
    integrals: Dict[Tuple[Counts, Counts], complex]

    def core(self, z: Sequence[complex]) -> complex:
        """D_n(z) without the prefactor prod (1 - z_i)^{n_i} (1 - 1/z_i)^{n_{i+1}}."""
        total = 0.0 + 0.0j
        for (cu, cv), integral in self.integrals.items():
            coefficient = 1.0 + 0.0j
            for i in range(2, self.n.m + 1):
                n_i, zi = self.n.n[i - 1], z[i - 2]
                inner = cu[i - 2] + cv[i - 2]
                coefficient *= math.comb(n_i, cu[i - 2]) * math.comb(n_i, cv[i - 2])
                coefficient *= (1.0 / (1.0 - zi)) ** inner * (-zi / (1.0 - zi)) ** (2 * n_i - inner)
            total += coefficient * integral
        return total

    def prefactor(self, z: Sequence[complex]) -> complex:
        value = 1.0 + 0.0j
        for i in range(1, self.n.m):
            value *= (1.0 - z[i - 1]) ** self.n.n[i - 1] * (1.0 - 1.0 / z[i - 1]) ** self.n.n[i]
        return value

    def __call__(self, z: Sequence[complex]) -> complex:
        return self.prefactor(z) * self.core(z)


def _check_z(cfg: PointConfig, z: Sequence[complex]) -> Tuple[complex, ...]:
    z = tuple(complex(x) for x in z)
    if len(z) != cfg.m - 1:
        raise ValueError(f"D_n needs {cfg.m - 1} z-values for m={cfg.m}, got {len(z)}")
    for x in z:
        if not 0 < abs(x) < 1:
            raise ValueError(f"z-values must satisfy 0 < |z| < 1, got {x}")
    return z


def direct_expansion(cfg: PointConfig, n: MultiIndex, config: RunConfig) -> DirectExpansion:
    """Evaluate every in/out assignment of D_n on the thread pool."""
    _check_index(cfg, n)
    family = chain_family(cfg.m, config)
    nested = n.n[1:]
    counts = list(itertools.product(*(range(x + 1) for x in nested)))
    assignments = list(itertools.product(counts, counts))

    integrals: Dict[Tuple[Counts, Counts], complex] = {}
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = {executor.submit(_direct_integral, cfg, n, family, cu, cv): (cu, cv) for cu, cv in assignments}

        for future in tqdm.tqdm(as_completed(futures), total=len(futures), disable=True):
            try:
                integrals[futures[future]] = future.result()
            except Exception as e:
                logger.error(f"D_n{n} assignment {futures[future]} failed: {e}")
                raise
    logger.debug(f"D_n{n} at {cfg.label()}: {len(integrals)} in/out assignments")
    return DirectExpansion(n, integrals)


def eval_D_n_core(cfg: PointConfig, n: MultiIndex, z: Sequence[complex], config: Optional[RunConfig] = None) -> complex:
    """D_n(z) divided by its z-prefactor."""
    config = config or RunConfig()
    z = _check_z(cfg, z)
    return direct_expansion(cfg, n, config).core(z)


def eval_D_n(cfg: PointConfig, n: MultiIndex, z: Sequence[complex], config: Optional[RunConfig] = None) -> complex:
    """
    The term D_n(z) of the multipoint formula.

    Every in/out product is expanded as written, so both contours of each
    group i >= 2 are integrated.

    Raises:
        ValueError: if some |z_i| is outside (0, 1) or n does not match cfg.
        CostGuardError: from MultiIndex.
        ContourOrderingError: if m > 3.
    """
    config = config or RunConfig()
    z = _check_z(cfg, z)
    if n.total == 0:
        return 1.0 + 0.0j
    return direct_expansion(cfg, n, config)(z)


def hat_D_direct(cfg: PointConfig, n: MultiIndex, config: Optional[RunConfig] = None) -> complex:
    """
    The z-integral of D_n on circles |z_i| = config.z_radius, trapezoid rule
    with config.circle_nodes points per circle, against dz / (2 pi i z (1 - z)).
    """
    config = config or RunConfig()
    _check_index(cfg, n)
    if n.total == 0:
        return 1.0 + 0.0j
    expansion = direct_expansion(cfg, n, config)
    if cfg.m == 1:
        return expansion(())

    N = config.circle_nodes
    circle = config.z_radius * np.exp(2j * np.pi * np.arange(N) / N)
    total = 0.0 + 0.0j
    for z in itertools.product(circle, repeat=cfg.m - 1):
        total += expansion(z) / np.prod([1.0 - x for x in z])
    value = complex(total / N ** (cfg.m - 1))
    logger.info(f"hat_D{n} at {cfg.label()} from D_n on |z|={config.z_radius:g}: {value:.10g}")
    return value


def _collapsed_integral(cfg: PointConfig, n: MultiIndex, family: ContourFamily) -> complex:
    """u^(i) on Gamma_{i,L}^in and v^(i) on Gamma_{i,R}^out, no z left."""
    U = {i: [_left_variable(cfg, family, f"u{i}_{l}", i, "in") for l in range(n_i)]
         for i, n_i in enumerate(n.n, start=1)}
    V = {i: [_right_F_variable(cfg, family, f"v{i}_{l}", i, "out") for l in range(n_i)]
         for i, n_i in enumerate(n.n, start=1)}
    return leibniz_integral(_chain_factors(U, V, n.m))


def _factorial_ratio(n: MultiIndex) -> float:
    """prod_{i<m} n_i! / k_i!."""
    return math.prod(math.factorial(n.n[i]) / math.factorial(n.k[i]) for i in range(n.m - 1))


def _right_moved_integral(cfg: PointConfig, n: MultiIndex, family: ContourFamily) -> complex:
    """U^(i) on Gamma_{i,L}^in, k_i variables V^(i) on Gamma_1R carrying 1/f_i."""
    m = n.m
    U = {i: [_left_variable(cfg, family, f"u{i}_{l}", i, "in") for l in range(n_i)]
         for i, n_i in enumerate(n.n, start=1)}
    U[m + 1] = []
    V = {i: [_right_f_variable(cfg, family, f"v{i}_{l}", i) for l in range(k_i)]
         for i, k_i in enumerate(n.k, start=1)}
    stacked = [v for i in range(m, 0, -1) for v in V[i]]
    factors = [DeterminantFactor(stacked, U[1])]
    factors += [DeterminantFactor(U[i], U[i + 1] + V[i]) for i in range(1, m + 1)]
    return _factorial_ratio(n) * leibniz_integral(factors)


def _folded_integral(cfg: PointConfig, n: MultiIndex, family: ContourFamily) -> complex:
    """k_i pairs (u^(i), v^(i)) on Gamma_1L x Gamma_1R joined through det[h_i]."""
    m = n.m
    U = {i: [_left_variable(cfg, family, f"u{i}_{l}", 1, "in", weight_index=0) for l in range(k_i)]
         for i, k_i in enumerate(n.k, start=1)}
    V = {i: [_right_f_variable(cfg, family, f"v{i}_{l}", i) for l in range(k_i)]
         for i, k_i in enumerate(n.k, start=1)}
    factors = [DeterminantFactor([v for i in range(m, 0, -1) for v in V[i]],
                                 [u for i in range(m, 0, -1) for u in U[i]])]
    factors += [DeterminantFactor(U[i], V[i], kernel=f"h{i}") for i in range(1, m + 1)]
    kernels = {f"h{i}": (lambda u, v, i=i: h_matrix(cfg, i, u, v, family)) for i in range(1, m + 1)}
    return _factorial_ratio(n) ** 2 * leibniz_integral(factors, kernels)


def hat_D_stage(cfg: PointConfig, n: MultiIndex, config: Optional[RunConfig] = None,
                stage: Stage = Stage.LEMMA23) -> complex:
    """
    hat_D_n from one of its simplified forms.

    lemma22i: the in/out pairs collapsed to Gamma_{i,L}^in and Gamma_{i,R}^out.
    lemma22ii: the right variables moved onto Gamma_1R, prefactor prod n_i!/k_i!.
    lemma23: Cauchy determinant times prod det[h_i], prefactor (prod n_i!/k_i!)^2.

    The last two vanish for non-admissible n and return an exact 0 there.
    """
    config = config or RunConfig()
    stage = Stage(stage)
    _check_index(cfg, n)
    if n.total == 0:
        return 1.0 + 0.0j
    if stage != Stage.LEMMA22I and not n.admissible:
        return 0.0 + 0.0j
    family = chain_family(cfg.m, config)
    if stage == Stage.LEMMA22I:
        value = _collapsed_integral(cfg, n, family)
    elif stage == Stage.LEMMA22II:
        value = _right_moved_integral(cfg, n, family)
    else:
        value = _folded_integral(cfg, n, family)
    logger.info(f"hat_D{n} at {cfg.label()} via {stage.value}: {value:.10g}")
    return complex(value)


def airy_cdf_via_sum(cfg: PointConfig, n_total_max: int, config: Optional[RunConfig] = None) -> FredholmResult:
    """
    Partial sums of sum_n hat_D_n / (prod n_i!)^2 over n_1 + ... + n_m <= cutoff.

    The history holds one partial sum per cutoff 0..n_total_max, so the error
    estimate is the size of the last shell of terms.

    Raises:
        CostGuardError: if n_total_max > 3.
    """
    config = config or RunConfig()
    if n_total_max < 0:
        raise ValueError(f"Cutoff must be nonnegative, got {n_total_max}")
    if n_total_max > MAX_CUTOFF:
        raise CostGuardError(f"Cutoff {n_total_max} above the cost guard {MAX_CUTOFF}")

    indices = [n for n in enumerate_indices(cfg.m, n_total_max) if n.total > 0 and n.admissible]
    shells = np.zeros(n_total_max + 1, dtype=complex)
    shells[0] = 1.0
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = {executor.submit(hat_D_stage, cfg, n, config, Stage.LEMMA23): n for n in indices}

        for future in tqdm.tqdm(as_completed(futures), total=len(futures), disable=True):
            n = futures[future]
            try:
                shells[n.total] += future.result() / n.factorial_weight
            except Exception as e:
                logger.error(f"Term hat_D{n} failed: {e}")
                raise

    result = FredholmResult.from_history(enumerate(np.cumsum(shells)))
    logger.info(f"Truncated sum at {cfg.label()} to cutoff {n_total_max}: {result.real:.10g} "
                f"(last shell {result.error_estimate:.2e})")
    return result


@dataclass(frozen=True)
class ChainComparison:
    index: MultiIndex
    hat_D: complex
    grouped_term: complex

    @property
    def deviation(self) -> float:
        return abs(self.hat_D - self.grouped_term)


def grouped_term_check(cfg: PointConfig, n: MultiIndex, config: Optional[RunConfig] = None) -> ChainComparison:
    """
    hat_D_n / (prod n_i!)^2 against the grouped term of det(I + K) with
    k_i = n_i - n_{i+1}.
    """
    config = config or RunConfig()
    if not n.admissible:
        raise ValueError(f"Only admissible indices have a grouped counterpart, got {n}")
    hat_D = hat_D_stage(cfg, n, config, Stage.LEMMA23) / n.factorial_weight
    grouped = grouped_series_terms(cfg, [n.k], config)[n.k]
    return ChainComparison(n, complex(hat_D), grouped)
