"""
Verification suites.

Each suite is a list of independent check units; a unit returns one or more
CheckResult rows. Units run on the thread pool and the report is ordered by
(suite, check) afterwards, so output does not depend on completion order.
"""

import dataclasses
import itertools
import logging
import time
import tqdm
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, Dict, List

import numpy as np

from errors import ConvergenceError
from fredholm import (
    fredholm_det_L,
    fredholm_det_b_minus_a,
    fredholm_det_contour_nystrom,
    fredholm_det_contour_series,
    fredholm_det_ext_airy,
    series_term_by_minors,
    triangular_factorization_check,
)
from identities import BlockPartition, DiscreteMeasure, andreief_pair, andreief_sweep, antisymmetry_check, okounkov_pair, polynomial
from kernels.contour import A_contour_matrix, A_raw_closed
from kernels.point_config import PointConfig
from liu_chain import MultiIndex, Stage, hat_D_direct, hat_D_stage, grouped_term_check
from schemas import CheckResult, RunReport
from special import airy_ai, airy_ai_expansion, airy_ai_via_contour
from special.tracy_widom import f_gue
from utils import RunConfig

logger = logging.getLogger(__name__)

SUITES = ("identities", "chain", "equivalence", "airy")

CHAIN_TOL = 1e-5
VANISHING_TOL = 1e-6
ONE_POINT_TOL = 1e-7
MARGINAL_TOL = 1e-5
AIRY_CONTOUR_TOL = 1e-11
AIRY_EXPANSION_TOL = 1e-12
AIRY_BAND_TOL = 1e-10
GAUSSIAN_AIRY_TOL = 1e-10
TRIANGULAR_TOL = 1e-10
A_CONTOUR_TOL = 1e-8
SERIES_TERM_TOL = 1e-10

CHAIN_POINTS = PointConfig((0.0, 1.0), (0.0, 0.0))
EQUIVALENCE_POINTS = [PointConfig((0.0, gap), (beta, beta)) for gap in (0.5, 1.0, 2.0) for beta in (-1.0, 0.0)]

Unit = Callable[[RunConfig], List[CheckResult]]


# identities

def andreief_units() -> Dict[str, Unit]:
    def sweep(config):
        results = andreief_sweep(200, seed=0, exact=True)
        failures = sum(1 for _, pair in results if not pair.agrees())
        return [CheckResult.compare("identities", "andreief_sweep",
                                    "generalized Andreief identity, 200 exact instances", failures, 0, 0)]

    def example(config):
        x = polynomial([0, 1])
        one = polynomial([1])
        pair = andreief_pair(BlockPartition(((0,), (1,))), [one, x], [one, x], DiscreteMeasure((0, 1), (1, 1)), exact=True)
        return [CheckResult.compare("identities", "andreief_two_blocks", "lhs = rhs = 1 over atoms {0, 1}",
                                    float(pair.rhs), float(pair.lhs), 0)]

    return {"andreief_sweep": sweep, "andreief_example": example}


def antisymmetry_unit(config: RunConfig) -> List[CheckResult]:
    mu = DiscreteMeasure((-1, 0, 2), (1, 1, 1))
    failures = sum(1 for seed in range(5) if not antisymmetry_check(3, 2, mu, seed).passed)
    return [CheckResult.compare("identities", "antisymmetry", "integration against antisymmetric weights, n=3, k=2",
                                failures, 0, 0)]


def gaussian_airy_unit(config: RunConfig) -> List[CheckResult]:
    pairs = [okounkov_pair(x, a, b) for x in (0.5, 1.0, 2.0) for a in (-1.0, 0.0, 1.0) for b in (-1.0, 0.0, 1.0)]
    worst = max(pair.deviation for pair in pairs)
    return [CheckResult.compare("identities", "gaussian_airy", "int e^{xz} Ai(z+a) Ai(z+b) dz closed form, 27 points",
                                worst, 0.0, GAUSSIAN_AIRY_TOL)]


# chain

def chain_agreement_unit(n: tuple) -> Unit:
    def unit(config):
        index = MultiIndex(n)
        values = [hat_D_direct(CHAIN_POINTS, index, config)]
        values += [hat_D_stage(CHAIN_POINTS, index, config, stage) for stage in Stage]
        spread = max(abs(a - b) for a, b in itertools.combinations(values, 2))
        return [CheckResult.compare("chain", f"hat_D{index}_stages", "direct = collapsed = moved = folded",
                                    spread, 0.0, CHAIN_TOL)]
    return unit


def chain_vanishing_unit(n: tuple) -> Unit:
    def unit(config):
        index = MultiIndex(n)
        value = abs(hat_D_direct(CHAIN_POINTS, index, config))
        return [CheckResult.compare("chain", f"hat_D{index}_vanishes", f"hat_D {index} = 0 off the admissible set",
                                    value, 0.0, VANISHING_TOL)]
    return unit


def grouped_term_unit(config: RunConfig) -> List[CheckResult]:
    comparison = grouped_term_check(CHAIN_POINTS, MultiIndex((1, 1)), config)
    return [CheckResult.compare("chain", "hat_D(1,1)_grouped_term", "hat_D_n / (prod n_i!)^2 = grouped det(I + K) term",
                                comparison.hat_D.real, comparison.grouped_term.real, CHAIN_TOL)]


# equivalence

def one_point_unit(config: RunConfig) -> List[CheckResult]:
    rows = []
    for alpha, beta in itertools.product((-1.0, 0.0, 1.0), (-2.0, -1.0, 0.0, 1.0)):
        cfg = PointConfig((alpha,), (beta,))
        value = fredholm_det_contour_nystrom(cfg, config).real
        reference = f_gue(beta + alpha ** 2, config).real
        rows.append(CheckResult.compare("equivalence", f"one_point[{cfg.label()}]",
                                        "det(I + K) with m=1 is F_GUE(beta + alpha^2)", value, reference, ONE_POINT_TOL))
    return rows


def two_point_unit(cfg: PointConfig) -> Unit:
    def unit(config):
        ext = fredholm_det_ext_airy(cfg, config).real
        reduced = fredholm_det_b_minus_a(cfg, config).real
        contour = fredholm_det_contour_nystrom(cfg, config).real
        L = fredholm_det_L(cfg, config).real
        triangular = triangular_factorization_check(cfg, config)
        label = cfg.label()
        return [
            CheckResult.compare("equivalence", f"reduction[{label}]", "det(I + B~ - A~) = det(I - chi K_ext chi)",
                                reduced, ext, config.tol),
            CheckResult.compare("equivalence", f"contour[{label}]", "det(I + K) = det(I + B~ - A~)",
                                contour, reduced, config.tol),
            CheckResult.compare("equivalence", f"L_operator[{label}]", "det(I + L) = det(I + B~ - A~)",
                                L, reduced, config.tol),
            CheckResult.compare("equivalence", f"triangular[{label}]", "B~ nilpotent factorization",
                                triangular.factored.real, triangular.direct.real, TRIANGULAR_TOL),
        ]
    return unit


def a_contour_unit(config: RunConfig) -> List[CheckResult]:
    lam = np.array([0.0, 0.5, 1.5])
    deviation = max(
        float(np.max(np.abs(A_contour_matrix(CHAIN_POINTS, i, lam, j, lam, config)
                            - A_raw_closed(CHAIN_POINTS, i, lam, j, lam, config))))
        for i, j in itertools.product((1, 2), repeat=2)
    )
    return [CheckResult.compare("equivalence", "A_contour", "contour A2 . A1 = conjugated A~",
                                deviation, 0.0, A_CONTOUR_TOL)]


def series_unit(config: RunConfig) -> List[CheckResult]:
    cfg = PointConfig((0.0,), (0.0,))
    series = fredholm_det_contour_series(cfg, config, 6)
    nystrom = fredholm_det_contour_nystrom(cfg, config).real
    second = series.history[2][1] - series.history[1][1]
    return [
        CheckResult.compare("equivalence", "series_order_6", "Fredholm series partial sum S_6 = det(I + K)",
                            series.real, nystrom, config.tol),
        CheckResult.compare("equivalence", "series_term_2", "e_2 of the eigenvalues = sum of 2 x 2 minors",
                            abs(second - series_term_by_minors(cfg, config, 2)), 0.0, SERIES_TERM_TOL),
    ]


def marginal_unit(config: RunConfig) -> List[CheckResult]:
    cfg = PointConfig((0.0, 1.0), (-1.0, 8.0))
    value = fredholm_det_b_minus_a(cfg, config).real
    return [CheckResult.compare("equivalence", "marginal", "beta_2 = 8 leaves the one-point law",
                                value, f_gue(-1.0, config).real, MARGINAL_TOL)]


# airy

def airy_unit(config: RunConfig) -> List[CheckResult]:
    grid = np.linspace(-10.0, 10.0, 41)
    contour = max(abs(airy_ai_via_contour(x).real - airy_ai(x)) for x in grid)
    reference_points = [x for x in np.linspace(-12.0, 12.0, 97) if abs(x) <= 3 or abs(x) >= 9]
    expansion = max(abs(airy_ai_expansion(x).ai - airy_ai(x)) for x in reference_points)
    band_points = np.concatenate([np.linspace(-5.5, -3.5, 9), np.linspace(3.5, 5.5, 9)])
    band = max(abs(airy_ai_expansion(x).ai - airy_ai(x)) for x in band_points)
    return [
        CheckResult.compare("airy", "contour", "Ai as a contour integral, 41 points on [-10, 10]",
                            contour, 0.0, AIRY_CONTOUR_TOL),
        CheckResult.compare("airy", "expansion", "Maclaurin and asymptotic series away from the switchover",
                            expansion, 0.0, AIRY_EXPANSION_TOL),
        CheckResult.compare("airy", "expansion_band", "Maclaurin series on the overlap band 3.5 <= |x| <= 5.5",
                            band, 0.0, AIRY_BAND_TOL),
    ]


def tracy_widom_unit(config: RunConfig) -> List[CheckResult]:
    values = [f_gue(s, config).real for s in (-6.0, -4.0, 0.0)]
    monotone = bool(values[0] < values[1] < values[2])
    return [
        CheckResult.compare("airy", "tw_tail", "F_GUE(8) = 1", f_gue(8.0, config).real, 1.0, 1e-10),
        CheckResult("airy", "tw_monotone", "F_GUE(-6) < F_GUE(-4) < F_GUE(0)", values[2], passed=monotone),
    ]


def suite_units(suite: str) -> Dict[str, Unit]:
    """
    Check units of a suite, by name.

    Raises:
        ValueError: If the suite is unknown
    """
    if suite == "identities":
        units = andreief_units()
        units.update({"antisymmetry": antisymmetry_unit, "gaussian_airy": gaussian_airy_unit})
        return units
    if suite == "chain":
        units = {f"stages{n}": chain_agreement_unit(n) for n in ((1, 0), (1, 1), (2, 1))}
        units.update({f"vanishing{n}": chain_vanishing_unit(n) for n in ((0, 1), (1, 2))})
        units["grouped_term"] = grouped_term_unit
        return units
    if suite == "equivalence":
        units = {f"two_point[{cfg.label()}]": two_point_unit(cfg) for cfg in EQUIVALENCE_POINTS}
        units.update({"one_point": one_point_unit, "series": series_unit, "marginal": marginal_unit,
                      "A_contour": a_contour_unit})
        return units
    if suite == "airy":
        return {"airy": airy_unit, "tracy_widom": tracy_widom_unit}
    raise ValueError(f"Unknown suite: {suite}. Must be one of {', '.join(SUITES + ('all',))}")


def _timed(unit: Unit, config: RunConfig) -> List[CheckResult]:
    start = time.perf_counter()
    rows = unit(config)
    seconds = (time.perf_counter() - start) / max(1, len(rows))
    return [dataclasses.replace(r, seconds=seconds) for r in rows]


def run(suite: str, config: RunConfig, command: str = "verify") -> RunReport:
    """
    Run one suite (or all of them) and collect the checks.

    A unit that raises is logged and reported as a failed check. Units run
    with strict refinement checks, so a non-converged determinant stops its
    unit and is reported with converged=False. Numerical breakdowns, and in
    strict mode every error, are re-raised for the exit-code mapping.
    """
    suites = SUITES if suite == "all" else (suite,)
    units = {}
    for name in suites:
        units.update({(name, key): unit for key, unit in suite_units(name).items()})

    report = RunReport(command, config.snapshot())
    checking = dataclasses.replace(config, strict=True)
    with ThreadPoolExecutor(max_workers=config.workers) as executor:
        futures = {executor.submit(_timed, unit, checking): key for key, unit in units.items()}

        for future in tqdm.tqdm(as_completed(futures), total=len(futures), disable=True):
            name, key = futures[future]
            try:
                for row in future.result():
                    report.add(row)
            except ConvergenceError as e:
                if config.strict:
                    raise
                logger.error(f"Check {name}.{key} did not converge: {e}")
                report.add(CheckResult(name, key, "raised ConvergenceError", float('nan'), passed=False,
                                       converged=False))
            except ArithmeticError:
                raise
            except Exception as e:
                if config.strict:
                    raise
                logger.error(f"Check {name}.{key} failed: {e}")
                report.add(CheckResult(name, key, f"raised {type(e).__name__}", float('nan'), passed=False))

    logger.info(f"Suite {suite}: {len(report.checks) - len(report.failures)} of {len(report.checks)} checks passed")
    return report
