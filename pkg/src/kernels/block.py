from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

BlockFunction = Callable[[int, np.ndarray, int, np.ndarray], np.ndarray]


class Domain(str, Enum):
    HALF_LINE = "half_line"
    LEFT_CONTOUR = "left_contour"


@dataclass(frozen=True)
class BlockKernel:
    """
    A kernel on {1..m} x domain.

    block(i, s_nodes, j, t_nodes) returns the len(s) x len(t) matrix of
    kernel values; the Nystrom assembly calls it once per (i, j) pair.
    """
    block: BlockFunction
    m: int
    domain: Domain = Domain.HALF_LINE
    name: str = ""

    def evaluate(self, i: int, s: complex, j: int, t: complex) -> complex:
        value = self.block(i, np.atleast_1d(s), j, np.atleast_1d(t))
        return complex(np.asarray(value)[0, 0])

    def __call__(self, i: int, s: complex, j: int, t: complex) -> complex:
        return self.evaluate(i, s, j, t)


def zero_kernel(m: int = 1) -> BlockKernel:
    return BlockKernel(lambda i, s, j, t: np.zeros((len(s), len(t))), m, Domain.HALF_LINE, "zero")


def conjugate(kernel: BlockKernel, d: Callable[[int, np.ndarray], np.ndarray]) -> BlockKernel:
    """The kernel d(i, s) K(i, s; j, t) / d(j, t); determinants are unchanged."""

    def block(i, s, j, t):
        return np.asarray(d(i, s))[:, None] * kernel.block(i, s, j, t) / np.asarray(d(j, t))[None, :]

    return BlockKernel(block, kernel.m, kernel.domain, f"conjugated {kernel.name}".strip())
