import logging
from dataclasses import dataclass
from typing import Iterable, Tuple

from errors import ConvergenceError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FredholmResult:
    """
    A determinant (or partial sum) together with how it was reached.

    history holds (resolution or truncation order, value) pairs in the order
    they were computed; value is the last entry and error_estimate is
    |last - previous| (0 when only one entry exists).
    """
    value: complex
    history: Tuple[Tuple[int, complex], ...]
    error_estimate: float

    def __post_init__(self):
        if not self.history:
            raise ValueError("FredholmResult history must be nonempty")

    @classmethod
    def from_history(cls, history: Iterable[Tuple[int, complex]]) -> "FredholmResult":
        history = tuple((int(order), complex(value)) for order, value in history)
        if not history:
            raise ValueError("FredholmResult history must be nonempty")
        last = history[-1][1]
        error = abs(last - history[-2][1]) if len(history) > 1 else 0.0
        return cls(last, history, float(error))

    @property
    def real(self) -> float:
        return self.value.real

    def check_convergence(self, tol: float, label: str, strict: bool = False) -> "FredholmResult":
        """
        Compare error_estimate with tol.

        Raises ConvergenceError in strict mode; otherwise logs a warning and
        returns self so the estimate travels with the value.
        """
        if self.error_estimate > tol:
            message = f"{label}: refinement estimate {self.error_estimate:.3e} above tolerance {tol:.1e}"
            if strict:
                raise ConvergenceError(message)
            logger.warning(message)
        return self
