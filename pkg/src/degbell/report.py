"""Pass/fail bookkeeping shared by the identity checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Case:
    key: str
    ok: bool
    lhs: str = ""
    rhs: str = ""

    def as_dict(self) -> dict[str, Any]:
        return {"key": self.key, "ok": self.ok, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckReport:
    """Outcome of one identity checked over many parameter cases."""

    name: str
    cases: list[Case] = field(default_factory=list)

    def add(self, key: str, ok: bool, lhs: Any = "", rhs: Any = "") -> None:
        self.cases.append(Case(key, bool(ok), str(lhs), str(rhs)))

    def extend(self, other: CheckReport) -> None:
        self.cases.extend(other.cases)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.ok]

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        n_fail = len(self.failures)
        status = "PASS" if n_fail == 0 else "FAIL"
        return f"{status} {self.name}: {len(self.cases) - n_fail}/{len(self.cases)} cases"
