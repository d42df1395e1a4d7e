"""Check results and machine-readable reports.

The JSON layout is fixed for diff-stability: a params object, a checks
array whose entries carry name, paper_ref, status, value, expected and
tolerance in that order, and a final passed flag.  Checks are assembled
sorted by name.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence


@dataclass(frozen=True)
class CheckResult:
    name: str
    ref: str  # the mathematical claim this check pins down
    passed: bool
    value: Any
    expected: Any
    tolerance: float = 0.0


@dataclass
class Report:
    params: dict
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, ref: str, value, expected, tolerance: float = 0.0,
            passed: bool | None = None) -> CheckResult:
        if passed is None:
            passed = value == expected
        result = CheckResult(name, ref, bool(passed), value, expected, tolerance)
        self.checks.append(result)
        return result

    def extend(self, results: Sequence[CheckResult]) -> None:
        self.checks.extend(results)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def sorted_checks(self) -> list[CheckResult]:
        return sorted(self.checks, key=lambda c: c.name)

    def first_failure(self) -> CheckResult | None:
        for c in self.sorted_checks():
            if not c.passed:
                return c
        return None

    def to_json_dict(self) -> dict:
        return {
            "params": {k: _plain(v) for k, v in self.params.items()},
            "checks": [
                {
                    "name": c.name,
                    "paper_ref": c.ref,
                    "status": "pass" if c.passed else "fail",
                    "value": _plain(c.value),
                    "expected": _plain(c.expected),
                    "tolerance": c.tolerance,
                }
                for c in self.sorted_checks()
            ],
            "passed": self.passed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self) -> str:
        lines = []
        if self.params:
            lines.append("params: " + ", ".join(f"{k}={_plain(v)}" for k, v in self.params.items()))
        for c in self.sorted_checks():
            status = "PASS" if c.passed else "FAIL"
            tol = f" tol={c.tolerance:g}" if c.tolerance else ""
            lines.append(
                f"[{status}] {c.name}: {_plain(c.value)} (expected {_plain(c.expected)}{tol})"
                f" :: {c.ref}"
            )
        good = sum(1 for c in self.checks if c.passed)
        lines.append(f"passed: {str(self.passed).lower()} ({good}/{len(self.checks)} checks)")
        return "\n".join(lines)


def _plain(v):
    """JSON-friendly rendering that keeps exact values readable."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else str(v.numerator)
    if isinstance(v, (int, str)):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, complex):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return str(v)
