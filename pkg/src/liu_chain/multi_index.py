import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Tuple

from errors import CostGuardError

MAX_TOTAL = 4


@dataclass(frozen=True)
class MultiIndex:
    """
    Term label n = (n_1, ..., n_m) of the D expansion.

    k_i = n_i - n_{i+1} with n_{m+1} = 0; the index is admissible when
    n_1 >= n_2 >= ... >= n_m, i.e. every k_i is nonnegative.
    """
    n: Tuple[int, ...]
    guard: int = MAX_TOTAL

    def __post_init__(self):
        n = tuple(int(x) for x in self.n)
        object.__setattr__(self, "n", n)
        if not n:
            raise ValueError("MultiIndex needs at least one entry")
        if min(n) < 0:
            raise ValueError(f"MultiIndex entries must be nonnegative, got {n}")
        if sum(n) > self.guard:
            raise CostGuardError(f"MultiIndex {n} has total {sum(n)} above the cost guard {self.guard}")

    @property
    def m(self) -> int:
        return len(self.n)

    @property
    def total(self) -> int:
        return sum(self.n)

    @property
    def k(self) -> Tuple[int, ...]:
        padded = self.n + (0,)
        return tuple(padded[i] - padded[i + 1] for i in range(self.m))

    @property
    def admissible(self) -> bool:
        return all(a >= b for a, b in zip(self.n, self.n[1:]))

    @property
    def factorial_weight(self) -> float:
        """(n_1! ... n_m!)^2."""
        return float(math.prod(math.factorial(x) for x in self.n) ** 2)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.n) + ")"


def enumerate_indices(m: int, total_max: int, guard: int = MAX_TOTAL) -> Iterator[MultiIndex]:
    """Every n with m entries and n_1 + ... + n_m <= total_max, by total then lexicographically."""
    if total_max > guard:
        raise CostGuardError(f"Enumeration total {total_max} above the cost guard {guard}")
    for total in range(total_max + 1):
        for n in itertools.product(range(total + 1), repeat=m):
            if sum(n) == total:
                yield MultiIndex(n, guard)
