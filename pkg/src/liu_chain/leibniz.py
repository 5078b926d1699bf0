"""
Integrals of products of determinants by full Leibniz expansion.

Every integration variable of the chain formulas sits in exactly one row
and one column of the determinant factors. A Leibniz term therefore joins
the variables into disjoint cycles of kernel entries, and its multiple
integral is a product of traces of matrix chains over the quadrature
nodes. Each term is contracted with numpy.einsum.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from kernels.contour import cauchy_matrix

logger = logging.getLogger(__name__)

CAUCHY = "cauchy"

EntryKernel = Callable[[np.ndarray, np.ndarray], np.ndarray]


@dataclass(frozen=True, eq=False)
class Variable:
    """
    One integration variable.

    Attributes:
        name: unique label.
        contour: label of the node set; variables on the same contour share
            kernel matrices.
        points: quadrature nodes.
        weights: quadrature weights times the variable's own integrand factor.
    """
    name: str
    contour: str
    points: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True)
class DeterminantFactor:
    """det[kernel(rows_a, cols_b)] over the given variables."""
    rows: Tuple[Variable, ...]
    cols: Tuple[Variable, ...]
    kernel: str = CAUCHY

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        if len(self.rows) != len(self.cols):
            raise ValueError(f"Determinant factor is not square: {len(self.rows)} rows, {len(self.cols)} columns")

    def __len__(self) -> int:
        return len(self.rows)


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def _collect_variables(factors: Sequence[DeterminantFactor]) -> List[Variable]:
    rows: Dict[str, Variable] = {}
    cols: Dict[str, Variable] = {}
    for factor in factors:
        for target, group in ((rows, factor.rows), (cols, factor.cols)):
            for var in group:
                if var.name in target:
                    raise ValueError(f"Variable {var.name} appears in more than one row")
                target[var.name] = var
    if rows.keys() != cols.keys():
        raise ValueError("Every variable must appear in exactly one row and one column")
    return list(rows.values())


def leibniz_integral(factors: Sequence[DeterminantFactor],
                     kernels: Optional[Mapping[str, EntryKernel]] = None) -> complex:
    """
    The multiple integral of prod_f det[f] against the variables' weights.

    Args:
        factors: determinant factors; empty factors contribute 1.
        kernels: entry kernels by name, in addition to the Cauchy kernel.

    Returns:
        complex

    Raises:
        ValueError: if some variable is not in exactly one row and one column,
            or a factor names an unknown kernel.
    """
    factors = [f for f in factors if len(f)]
    if not factors:
        return 1.0 + 0.0j
    entry_kernels: Dict[str, EntryKernel] = {CAUCHY: cauchy_matrix}
    entry_kernels.update(kernels or {})
    for factor in factors:
        if factor.kernel not in entry_kernels:
            raise ValueError(f"Unknown entry kernel {factor.kernel}")

    variables = _collect_variables(factors)
    label = {var.name: index for index, var in enumerate(variables)}
    weight_operands = []
    for var in variables:
        weight_operands += [var.weights, [label[var.name]]]

    cache: Dict[Tuple[str, str, str], np.ndarray] = {}

    def edge(kernel: str, row: Variable, col: Variable) -> np.ndarray:
        key = (kernel, row.contour, col.contour)
        if key not in cache:
            cache[key] = entry_kernels[kernel](row.points, col.points)
        return cache[key]

    total = 0.0 + 0.0j
    n_terms = 0
    for perms in itertools.product(*(itertools.permutations(range(len(f))) for f in factors)):
        sign = math.prod(permutation_sign(p) for p in perms)
        operands = list(weight_operands)
        for factor, perm in zip(factors, perms):
            for a, b in enumerate(perm):
                row, col = factor.rows[a], factor.cols[b]
                operands += [edge(factor.kernel, row, col), [label[row.name], label[col.name]]]
        total += sign * complex(np.einsum(*operands, [], optimize="greedy"))
        n_terms += 1
    logger.debug(f"Leibniz integral over {len(variables)} variables: {n_terms} terms")
    return total
