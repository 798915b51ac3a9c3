"""Verification reports shared by every check."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of one verification: pass/fail, how many items were checked, first witness."""

    name: str
    passed: bool = True
    checked: int = 0
    witness: str | None = None
    details: dict = field(default_factory=dict)

    def fail(self, witness: str) -> "Report":
        if self.passed:
            self.passed = False
            self.witness = witness
        return self

    def merge(self, other: "Report") -> "Report":
        self.checked += other.checked
        if not other.passed:
            self.fail(f"{other.name}: {other.witness}")
        return self

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked, "witness": self.witness}
        if self.details:
            out["details"] = self.details
        return out
