"""Structured results of verification runs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckRecord:
    params: tuple
    left: Any
    right: Any
    passed: bool

    def as_dict(self) -> dict:
        return {
            "params": list(self.params),
            "left": _jsonable(self.left),
            "right": _jsonable(self.right),
            "passed": self.passed,
        }


def _jsonable(v):
    if isinstance(v, (int, bool)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


@dataclass
class Report:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    def add(self, params: tuple, left, right, passed: bool | None = None) -> None:
        if passed is None:
            passed = left == right
        self.records.append(CheckRecord(tuple(params), left, right, bool(passed)))

    def sort(self) -> "Report":
        self.records.sort(key=lambda r: r.params)
        return self

    @property
    def violations(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def checked(self) -> int:
        return len(self.records)

    def summary(self) -> dict:
        bad = self.violations
        return {
            "suite": self.suite,
            "checked": self.checked,
            "passed": self.checked - len(bad),
            "failed": len(bad),
            "ok": not bad,
            "failures": [r.as_dict() for r in bad],
        }
