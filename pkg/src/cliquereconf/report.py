"""Machine-readable verification results."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class TheoremViolation(AssertionError):
    """A verifier found a counterexample; ``report`` carries the witness."""

    def __init__(self, report: Report) -> None:
        super().__init__(f"{report.theorem} violated: {report.witness}")
        self.report = report


@dataclass
class Report:
    theorem: str
    passed: bool
    values: dict[str, Any] = field(default_factory=dict)
    witness: Any = None

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"theorem": self.theorem, "pass": self.passed, "values": self.values}
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    def raise_if_failed(self) -> Report:
        if not self.passed:
            raise TheoremViolation(self)
        return self
