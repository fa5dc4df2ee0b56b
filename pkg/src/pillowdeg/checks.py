"""Named pass/fail checks and the reports the verifiers return.

Every verification operation in this package reports its findings instead
of raising: a report is a list of checks, each recording both sides of the
comparison so a failure is diagnosable from the report alone.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    return str(value)


@dataclass(frozen=True)
class Check:
    """One named comparison: passes iff ``lhs == rhs``."""

    name: str
    lhs: Any
    rhs: Any

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}: {self.lhs} == {self.rhs}"


@dataclass
class Report:
    """An ordered collection of checks produced by one verifier."""

    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, lhs: Any, rhs: Any) -> Check:
        check = Check(name, lhs, rhs)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def as_dict(self) -> dict:
        return {
            "title": self.title,
            "all_passed": self.all_passed,
            "checks": [c.as_dict() for c in self.checks],
        }

    def __str__(self) -> str:
        lines = [self.title] + ["  " + str(c) for c in self.checks]
        lines.append("  => " + ("all checks passed" if self.all_passed else f"{len(self.failures)} check(s) FAILED"))
        return "\n".join(lines)
