import logging
import sys
import tqdm
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional

import numpy as np
import pandas as pd

from kernels.point_config import PointConfig, parse_points
from orchestrators.cdf import compute_cdf
from schemas import write_csv
from special.tracy_widom import TABLE_COLUMNS, f_gue
from utils import RunConfig

logger = logging.getLogger(__name__)

TARGETS = ("tw", "joint-slice")


def grid(start: float, stop: float, step: float) -> List[float]:
    """
    start, start + step, ..., stop (inclusive when stop is on the lattice).

    Raises:
        ValueError: If the range is empty or step is not positive
    """
    if not step > 0:
        raise ValueError(f"Step must be positive, got {step}")
    if not start < stop:
        raise ValueError(f"Range start must be below its end, got {start} >= {stop}")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    return [float(start + k * step) for k in range(count)]


def sweep(values: List[float], evaluate: Callable[[float], float], workers: int) -> List[float]:
    """evaluate over values on the thread pool, results in input order."""
    results = {}
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = {executor.submit(evaluate, x): x for x in values}

        for future in tqdm.tqdm(as_completed(futures), total=len(futures), disable=True):
            try:
                results[futures[future]] = future.result()
            except Exception as e:
                logger.error(f"Table point {futures[future]:g} failed: {e}")
                raise
    return [results[x] for x in values]


def tw_table(start: float, stop: float, step: float, config: RunConfig) -> pd.DataFrame:
    values = grid(start, stop, step)
    column = sweep(values, lambda s: f_gue(s, config).real, config.workers)
    return pd.DataFrame({TABLE_COLUMNS[0]: values, TABLE_COLUMNS[1]: column})


def joint_slice_table(fix: str, alpha2: float, start: float, stop: float, step: float,
                      config: RunConfig, method: str = "b-minus-a",
                      cutoff: Optional[int] = None) -> pd.DataFrame:
    """
    P(A(alpha_1) <= beta_1, A(alpha_2) <= beta2) over a beta2 grid, with the
    first point fixed by an "alpha:beta" string.

    Raises:
        InvalidPointsError: If fix is malformed or alpha2 is not above its alpha
    """
    first = parse_points(fix)
    if first.m != 1:
        raise ValueError(f"--fix takes exactly one alpha:beta point, got {first.m}")
    values = grid(start, stop, step)
    # validate once before fanning out
    PointConfig((first.a(1), alpha2), (first.b(1), values[0]))

    def evaluate(beta2: float) -> float:
        cfg = PointConfig((first.a(1), alpha2), (first.b(1), beta2))
        return compute_cdf(cfg, method, config, cutoff).real

    column = sweep(values, evaluate, config.workers)
    return pd.DataFrame({"beta2": values, "P": column})


def run(target: str, start: float, stop: float, step: float, config: RunConfig,
        fix: Optional[str] = None, alpha2: float = 1.0, method: str = "b-minus-a",
        cutoff: Optional[int] = None, stream=None) -> pd.DataFrame:
    """Build the table and write it as CSV to stream (stdout by default)."""
    stream = sys.stdout if stream is None else stream
    if target == "tw":
        df = tw_table(start, stop, step, config)
    elif target == "joint-slice":
        if fix is None:
            raise ValueError("joint-slice needs --fix alpha:beta")
        df = joint_slice_table(fix, alpha2, start, stop, step, config, method, cutoff)
    else:
        raise ValueError(f"Unknown table: {target}. Must be one of {', '.join(TARGETS)}")
    write_csv(df, target, stream)
    logger.info(f"Table {target} with {len(df)} rows written")
    return df
