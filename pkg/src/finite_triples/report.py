"""Pass/fail bookkeeping for numerical checks."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    residual: float
    passed: bool
    note: str = ""

    def to_json(self) -> dict:
        out = {"residual": float(self.residual), "passed": bool(self.passed)}
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CheckReport:
    tol: float
    checks: dict[str, Check] = field(default_factory=dict)

    def add(self, name: str, residual: float, passed: bool | None = None, note: str = "") -> Check:
        ok = residual < self.tol if passed is None else passed
        c = Check(float(residual), bool(ok), note)
        self.checks[name] = c
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if not c.passed]

    def __getitem__(self, name: str) -> Check:
        return self.checks[name]

    def __contains__(self, name: str) -> bool:
        return name in self.checks

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "tolerance": self.tol,
            "checks": {k: c.to_json() for k, c in self.checks.items()},
        }
