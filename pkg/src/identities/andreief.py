"""
Block-generalized Andreief identity over discrete measures.

    det[ int A_i B_j dmu ] = 1/prod |I_k|! * int det[A_i(x_j)] prod_k det[B_i(x_j)]_{i,j in I_k} dmu^n

Atomic measures turn both sides into finite sums, so the identity can be
checked exactly in rational arithmetic.
"""

import itertools
import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple, Union

import numpy as np

from errors import CostGuardError
from liu_chain.leibniz import permutation_sign

logger = logging.getLogger(__name__)

MAX_ANDREIEF_SIZE = 7

Number = Union[int, float, complex, Fraction]
Function = Callable[[Number], Number]


@dataclass(frozen=True)
class DiscreteMeasure:
    atoms: Tuple[Number, ...]
    weights: Tuple[Number, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.atoms or len(self.atoms) != len(self.weights):
            raise ValueError(f"Measure needs as many weights as atoms (at least one), "
                             f"got {len(self.atoms)} atoms and {len(self.weights)} weights")
        if any(not w > 0 for w in self.weights):
            raise ValueError(f"Measure weights must be positive, got {self.weights}")

    def __len__(self) -> int:
        return len(self.atoms)


@dataclass(frozen=True)
class BlockPartition:
    """Disjoint blocks covering {0, ..., n-1}."""
    blocks: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(i) for i in block) for block in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = sorted(i for block in blocks for i in block)
        if any(not block for block in blocks) or flat != list(range(len(flat))):
            raise ValueError(f"Blocks must be nonempty, disjoint and cover 0..n-1, got {blocks}")

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    def phi(self, i: int, j: int) -> int:
        """1 when i and j share a block."""
        return int(any(i in block and j in block for block in self.blocks))

    @property
    def symmetry_order(self) -> int:
        return math.prod(math.factorial(len(block)) for block in self.blocks)


def exact_det(matrix: Sequence[Sequence[Number]]) -> Number:
    """Leibniz expansion; keeps Fraction entries exact."""
    n = len(matrix)
    total: Number = 0
    for perm in itertools.permutations(range(n)):
        term: Number = permutation_sign(perm)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term == 0:
                break
        total = total + term
    return total


def _det(matrix: List[List[Number]], exact: bool) -> Number:
    if exact:
        return exact_det(matrix)
    if not matrix:
        return 1.0
    return complex(np.linalg.det(np.array(matrix, dtype=complex)))


@dataclass(frozen=True)
class AndreiefPair:
    """lhs, the block-product right side and the indicator-masked right side."""
    lhs: Number
    rhs: Number
    rhs_indicator: Number

    def agrees(self, rel_tol: float = 0.0) -> bool:
        scale = max(1.0, abs(self.lhs))
        return abs(self.lhs - self.rhs) <= rel_tol * scale and abs(self.rhs - self.rhs_indicator) <= rel_tol * scale


def andreief_pair(partition: BlockPartition, A: Sequence[Function], B: Sequence[Function],
                  mu: DiscreteMeasure, exact: bool = False) -> AndreiefPair:
    """
    Both sides of the block Andreief identity for atomic mu.

    Assignments with a repeated atom make det[A_i(x_j)] vanish and are skipped.

    Args:
        partition: the blocks I_k.
        A, B: n functions each.
        mu: the measure.
        exact: use Fraction-exact determinants (values must then be rational).

    Raises:
        ValueError: if A, B and the partition disagree on n.
        CostGuardError: if n > 7.
    """
    n = partition.n
    if len(A) != n or len(B) != n:
        raise ValueError(f"Partition covers {n} indices but got {len(A)} A- and {len(B)} B-functions")
    if n > MAX_ANDREIEF_SIZE:
        raise CostGuardError(f"Andreief size {n} above the cost guard {MAX_ANDREIEF_SIZE}")

    a_values = [[A[i](x) for x in mu.atoms] for i in range(n)]
    b_values = [[B[i](x) for x in mu.atoms] for i in range(n)]

    gram = [[sum(a_values[i][s] * b_values[j][s] * mu.weights[s] for s in range(len(mu))) for j in range(n)]
            for i in range(n)]
    lhs = _det(gram, exact)

    rhs: Number = 0
    rhs_indicator: Number = 0
    for sites in itertools.permutations(range(len(mu)), n):
        a_det = _det([[a_values[i][s] for s in sites] for i in range(n)], exact)
        if a_det == 0:
            continue
        measure = math.prod(mu.weights[s] for s in sites)
        blocks = math.prod(_det([[b_values[i][sites[j]] for j in block] for i in block], exact)
                           for block in partition.blocks)
        masked = _det([[b_values[i][sites[j]] * partition.phi(i, j) for j in range(n)] for i in range(n)], exact)
        rhs = rhs + a_det * blocks * measure
        rhs_indicator = rhs_indicator + a_det * masked * measure

    order = partition.symmetry_order
    if exact:
        rhs, rhs_indicator = Fraction(rhs) / order, Fraction(rhs_indicator) / order
    else:
        rhs, rhs_indicator = rhs / order, rhs_indicator / order
    return AndreiefPair(lhs, rhs, rhs_indicator)


def polynomial(coefficients: Sequence[int]) -> Function:
    """x -> sum c_d x^d."""
    coefficients = tuple(coefficients)

    def evaluate(x):
        return sum(c * x ** d for d, c in enumerate(coefficients))

    return evaluate


def random_partition(n: int, max_blocks: int, rng: random.Random) -> BlockPartition:
    q = rng.randint(1, min(n, max_blocks))
    order = list(range(n))
    rng.shuffle(order)
    cuts = sorted(rng.sample(range(1, n), q - 1))
    edges = [0] + cuts + [n]
    return BlockPartition(tuple(tuple(sorted(order[a:b])) for a, b in zip(edges, edges[1:])))


@dataclass(frozen=True)
class AndreiefInstance:
    seed: int
    partition: BlockPartition
    A: Tuple[Function, ...]
    B: Tuple[Function, ...]
    mu: DiscreteMeasure


def random_instance(seed: int, max_n: int = 6, max_blocks: int = 3, max_atoms: int = 4) -> AndreiefInstance:
    """Integer polynomials on distinct integer atoms with positive rational weights."""
    rng = random.Random(seed)
    n_atoms = rng.randint(1, max_atoms)
    n = rng.randint(1, min(max_n, n_atoms + 2))
    atoms = tuple(rng.sample(range(-3, 4), n_atoms))
    weights = tuple(Fraction(rng.randint(1, 5), rng.randint(1, 3)) for _ in range(n_atoms))

    def draw() -> Function:
        return polynomial([rng.randint(-3, 3) for _ in range(rng.randint(1, 3))])

    A = tuple(draw() for _ in range(n))
    B = tuple(draw() for _ in range(n))
    return AndreiefInstance(seed, random_partition(n, max_blocks, rng), A, B, DiscreteMeasure(atoms, weights))


def andreief_sweep(count: int = 200, seed: int = 0, exact: bool = True) -> List[Tuple[AndreiefInstance, AndreiefPair]]:
    """Seeded random instances with n <= 6, at most 3 blocks and 4 atoms."""
    results = []
    for offset in range(count):
        instance = random_instance(seed + offset)
        mu = instance.mu
        if not exact:
            mu = DiscreteMeasure(tuple(float(x) for x in mu.atoms), tuple(float(w) for w in mu.weights))
        results.append((instance, andreief_pair(instance.partition, instance.A, instance.B, mu, exact)))
    failures = sum(1 for _, pair in results if not pair.agrees(0.0 if exact else 1e-12))
    logger.info(f"Andreief sweep: {count} instances from seed {seed}, {failures} disagreements")
    return results
