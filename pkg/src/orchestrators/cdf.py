import itertools
import logging
import time
import tqdm
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, Optional

from fredholm import fredholm_det_b_minus_a, fredholm_det_contour_nystrom, fredholm_det_ext_airy
from fredholm.results import FredholmResult
from kernels.point_config import PointConfig
from liu_chain import airy_cdf_via_sum
from schemas import CheckResult, RunReport
from utils import RunConfig

logger = logging.getLogger(__name__)

METHODS = ("ext-airy", "contour-k", "b-minus-a", "liu-sum")

ANCHORS = {
    "ext-airy": "det(I - chi K_ext chi), extended Airy kernel",
    "contour-k": "det(I + K), contour kernel on Gamma_1L",
    "b-minus-a": "det(I + B~ - A~), half-line reduction",
    "liu-sum": "sum_n hat_D_n / (prod n_i!)^2, truncated",
}

DEFAULT_CUTOFF = {1: 3, 2: 2}
COMPARE_TOL = 1e-5
# a CDF value may overshoot [0, 1] by quadrature noise only
RANGE_SLACK = 1e-8


def default_cutoff(m: int) -> int:
    return DEFAULT_CUTOFF.get(m, 1)


def compute_cdf(cfg: PointConfig, method: str, config: RunConfig, cutoff: Optional[int] = None) -> FredholmResult:
    """
    The joint CDF P(A(alpha_i) <= beta_i for all i) by one pipeline.

    Raises:
        ValueError: If the method is unknown
    """
    if method == "ext-airy":
        return fredholm_det_ext_airy(cfg, config)
    if method == "contour-k":
        return fredholm_det_contour_nystrom(cfg, config)
    if method == "b-minus-a":
        return fredholm_det_b_minus_a(cfg, config)
    if method == "liu-sum":
        return airy_cdf_via_sum(cfg, default_cutoff(cfg.m) if cutoff is None else cutoff, config)
    raise ValueError(f"Unknown method: {method}. Must be one of {', '.join(METHODS)}")


def _timed(cfg, method, config, cutoff):
    start = time.perf_counter()
    result = compute_cdf(cfg, method, config, cutoff)
    return result, time.perf_counter() - start


def _method_check(method: str, result: FredholmResult, seconds: float, tol: float) -> CheckResult:
    value = result.real
    in_range = -RANGE_SLACK <= value <= 1 + RANGE_SLACK
    # the liu-sum estimate is a truncation tail, bounded by the compare allowance instead
    converged = method == "liu-sum" or result.error_estimate <= tol
    return CheckResult("cdf", method, ANCHORS[method], value, passed=in_range, seconds=seconds,
                       error_estimate=result.error_estimate, converged=bool(converged))


def run(cfg: PointConfig, method: str, config: RunConfig, compare: bool = False,
        cutoff: Optional[int] = None, command: str = "cdf") -> RunReport:
    """
    Evaluate the joint CDF by one method, or by all four side by side.

    With compare, a max_deviation check is added; liu-sum values are allowed
    their own tail estimate on top of COMPARE_TOL.
    """
    methods = METHODS if compare else (method,)
    for name in methods:
        if name not in METHODS:
            raise ValueError(f"Unknown method: {name}. Must be one of {', '.join(METHODS)}")

    report = RunReport(command, config.snapshot())
    results: Dict[str, FredholmResult] = {}
    with ThreadPoolExecutor(max_workers=min(config.workers, len(methods))) as executor:
        futures = {executor.submit(_timed, cfg, name, config, cutoff): name for name in methods}

        for future in tqdm.tqdm(as_completed(futures), total=len(futures), disable=True):
            name = futures[future]
            try:
                result, seconds = future.result()
            except Exception as e:
                logger.error(f"Method {name} failed at {cfg.label()}: {e}")
                raise
            results[name] = result
            report.add(_method_check(name, result, seconds, config.tol))

    if compare:
        deviation = 0.0
        allowed = COMPARE_TOL
        for a, b in itertools.combinations(METHODS, 2):
            deviation = max(deviation, abs(results[a].real - results[b].real))
        allowed += results["liu-sum"].error_estimate
        report.add(CheckResult("cdf", "max_deviation", "all four pipelines agree", deviation, 0.0,
                               allowed, bool(deviation <= allowed)))
        logger.info(f"Pipelines at {cfg.label()} agree to {deviation:.2e}")
    return report
