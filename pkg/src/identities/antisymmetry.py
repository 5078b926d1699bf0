"""
Integrals against an antisymmetric weight F.

(i)  sum_w F(w) det[p_i(w_j)] = n! sum_w F(w) prod p_i(w_i)
(ii) G(w') = sum_w F(w) prod_{j<=k} q(w_j, w'_j) is antisymmetric in w'

Sums run over atoms^n of a discrete measure, in Fraction arithmetic.
"""

import itertools
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Tuple

from errors import CostGuardError
from identities.andreief import DiscreteMeasure, Function, Number, exact_det, polynomial

logger = logging.getLogger(__name__)

MAX_ANTISYMMETRY_SIZE = 5


@dataclass(frozen=True)
class AntisymmetryReport:
    n: int
    k: int
    determinant_side: Number
    product_side: Number
    contraction: Number
    swapped: Tuple[Number, ...]

    @property
    def expansion_holds(self) -> bool:
        return self.determinant_side == self.product_side

    @property
    def antisymmetric(self) -> bool:
        return all(value == -self.contraction for value in self.swapped)

    @property
    def passed(self) -> bool:
        return self.expansion_holds and self.antisymmetric


def vandermonde_weight(g: Function) -> Callable[[Sequence[Number]], Number]:
    """F(w) = prod_{i<j} (w_j - w_i) prod_i g(w_i)."""

    def F(w: Sequence[Number]) -> Number:
        value: Number = 1
        for i, j in itertools.combinations(range(len(w)), 2):
            value *= w[j] - w[i]
        for x in w:
            value *= g(x)
        return value

    return F


def _contract(F, q, mu: DiscreteMeasure, n: int, w_prime: Sequence[Number]) -> Number:
    total: Number = 0
    for sites in itertools.product(range(len(mu)), repeat=n):
        w = [mu.atoms[s] for s in sites]
        weight = math.prod(mu.weights[s] for s in sites)
        total += weight * F(w) * math.prod(q(w[j], w_prime[j]) for j in range(len(w_prime)))
    return total


def antisymmetry_check(n: int, k: int, mu: DiscreteMeasure, seed: int = 0) -> AntisymmetryReport:
    """
    Check both parts with random integer polynomials drawn from seed.

    Raises:
        ValueError: if k is not in 0..n.
        CostGuardError: if n > 5.
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"Need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    if n > MAX_ANTISYMMETRY_SIZE:
        raise CostGuardError(f"Antisymmetry size {n} above the cost guard {MAX_ANTISYMMETRY_SIZE}")

    rng = random.Random(seed)
    F = vandermonde_weight(polynomial([rng.randint(1, 3), rng.randint(-2, 2)]))
    p = [polynomial([rng.randint(-3, 3) for _ in range(3)]) for _ in range(n)]
    coefficients = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]

    def q(w, w2):
        return sum(c * w ** a * w2 ** b for a, row in enumerate(coefficients) for b, c in enumerate(row))

    determinant_side: Number = 0
    product_side: Number = 0
    for sites in itertools.product(range(len(mu)), repeat=n):
        w = [mu.atoms[s] for s in sites]
        weight = math.prod(mu.weights[s] for s in sites) * F(w)
        if weight == 0:
            continue
        determinant_side += weight * exact_det([[p[i](w[j]) for j in range(n)] for i in range(n)])
        product_side += weight * math.prod(p[i](w[i]) for i in range(n))
    product_side *= math.factorial(n)

    w_prime = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(k)]
    contraction = _contract(F, q, mu, n, w_prime)
    swapped = []
    for j in range(k - 1):
        transposed = list(w_prime)
        transposed[j], transposed[j + 1] = transposed[j + 1], transposed[j]
        swapped.append(_contract(F, q, mu, n, transposed))

    report = AntisymmetryReport(n, k, determinant_side, product_side, contraction, tuple(swapped))
    logger.debug(f"Antisymmetry n={n}, k={k}, seed={seed}: passed={report.passed}")
    return report
