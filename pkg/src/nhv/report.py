"""Verification reports shared by all checks and the command line."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any


def render(obj: Any) -> str:
    if hasattr(obj, "to_text"):
        return obj.to_text()
    return str(obj)


@dataclass
class Check:
    name: str
    lhs: str
    rhs: str
    equal: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs,
                "equal": bool(self.equal), "detail": self.detail}


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    informational: bool = False
    timing_ms: float = 0.0
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    def add(self, name: str, lhs: Any, rhs: Any, equal: bool | None = None,
            detail: str = "") -> bool:
        if equal is None:
            equal = lhs == rhs
        self.checks.append(Check(name, render(lhs), render(rhs), bool(equal), detail))
        return bool(equal)

    def expect(self, name: str, ok: bool, detail: str = "") -> bool:
        return self.add(name, "true" if ok else "false", "true", bool(ok), detail)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.lhs, c.rhs, c.equal, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.equal for c in self.checks)

    @property
    def status(self) -> str:
        if self.informational:
            return "info"
        return "pass" if self.passed else "fail"

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.equal]

    def finish(self) -> "Report":
        self.timing_ms = round((time.perf_counter() - self._t0) * 1000.0, 3)
        return self

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "status": self.status,
            "checks": [c.as_dict() for c in sorted(self.checks, key=lambda c: c.name)],
            "timing_ms": self.timing_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status} ({len(self.checks)} checks, {self.timing_ms:.1f} ms)"]
        for c in sorted(self.checks, key=lambda c: c.name):
            if self.informational:
                mark = "yes " if c.equal else "no  "
            else:
                mark = "ok  " if c.equal else "FAIL"
            line = f"  [{mark}] {c.name}: {c.lhs} == {c.rhs}" if c.lhs != c.rhs or not c.equal \
                else f"  [{mark}] {c.name}: {c.lhs}"
            if c.detail:
                line += f"  ({c.detail})"
            lines.append(line)
        return "\n".join(lines)

    def __bool__(self):
        return self.passed
