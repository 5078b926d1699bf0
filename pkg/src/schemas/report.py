"""
RunReport: what a CLI invocation computed and whether its checks passed.

Text output is one key=value line per field. Wall times vary between runs,
so they are gathered on the single `timing=` line; every other line is
reproducible for identical inputs.
"""

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List

import pandas as pd

from schemas.tables import CHECK_SCHEMA, enforce_schema


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    anchor: str
    value: float
    reference: float = float('nan')
    tolerance: float = float('nan')
    passed: bool = True
    seconds: float = 0.0
    error_estimate: float = float('nan')
    # false when a refinement estimate stayed above the run tolerance
    converged: bool = True

    @property
    def deviation(self) -> float:
        if math.isnan(self.reference):
            return float('nan')
        return abs(self.value - self.reference)

    @classmethod
    def compare(cls, suite: str, check: str, anchor: str, value: float, reference: float,
                tolerance: float, seconds: float = 0.0) -> "CheckResult":
        passed = bool(abs(value - reference) <= tolerance)
        return cls(suite, check, anchor, float(value), float(reference), float(tolerance), passed, seconds)


@dataclass
class RunReport:
    command: str
    config: Dict[str, object]
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)

    def sorted_checks(self) -> List[CheckResult]:
        return sorted(self.checks, key=lambda c: (c.suite, c.check))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.sorted_checks() if not c.passed]

    @property
    def converged(self) -> bool:
        return all(c.converged for c in self.checks)

    @property
    def unconverged(self) -> List[CheckResult]:
        return [c for c in self.sorted_checks() if not c.converged]

    def to_frame(self) -> pd.DataFrame:
        rows = [dict(asdict(c), deviation=c.deviation) for c in self.sorted_checks()]
        return enforce_schema(pd.DataFrame(rows, columns=list(CHECK_SCHEMA)), CHECK_SCHEMA)

    def to_text(self, timings: bool = True) -> str:
        lines = [f"command={self.command}"]
        lines += [f"config.{key}={value}" for key, value in sorted(self.config.items())]
        for c in self.sorted_checks():
            prefix = f"check.{c.suite}.{c.check}"
            lines.append(f"{prefix}.anchor={c.anchor}")
            lines.append(f"{prefix}.value={c.value:.12g}")
            if not math.isnan(c.reference):
                lines.append(f"{prefix}.reference={c.reference:.12g}")
                lines.append(f"{prefix}.deviation={c.deviation:.3e}")
            if not math.isnan(c.error_estimate):
                lines.append(f"{prefix}.error_estimate={c.error_estimate:.3e}")
            if not math.isnan(c.tolerance):
                lines.append(f"{prefix}.tolerance={c.tolerance:.1e}")
            lines.append(f"{prefix}.passed={str(c.passed).lower()}")
            if not c.converged:
                lines.append(f"{prefix}.converged=false")
        lines.append(f"passed={str(self.passed).lower()}")
        lines.append(f"converged={str(self.converged).lower()}")
        if timings:
            lines.append("timing=" + ",".join(f"{c.suite}.{c.check}:{c.seconds:.2f}" for c in self.sorted_checks()))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        def clean(x):
            return None if isinstance(x, float) and math.isnan(x) else x

        document = {
            "command": self.command,
            "config": {key: self.config[key] for key in sorted(self.config)},
            "checks": [{key: clean(value) for key, value in dict(asdict(c), deviation=c.deviation).items()}
                       for c in self.sorted_checks()],
            "passed": self.passed,
            "converged": self.converged,
        }
        return json.dumps(document, indent=2, sort_keys=False) + "\n"
