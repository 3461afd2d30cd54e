"""Verification report data types."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

from surfbraid.words import GroupParams

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


@dataclass
class CheckResult:
    """Outcome of one named check."""

    check_id: str
    status: str  # "pass", "fail", "skip"
    witness: str | None = None  # set whenever status is "fail"
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.check_id,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    """All checks of one suite for one parameter triple."""

    suite: str
    params: GroupParams
    seed: int | None = None
    checks: list[CheckResult] = field(default_factory=list)

    def check(self, check_id: str, witness: str | None, detail: str = "") -> None:
        """Record a check: it passes iff no witness was found."""
        status = PASS if witness is None else FAIL
        self.checks.append(CheckResult(check_id, status, witness, detail))

    def skip(self, check_id: str, reason: str) -> None:
        self.checks.append(CheckResult(check_id, SKIP, None, reason))

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def sorted(self) -> "VerificationReport":
        return VerificationReport(
            self.suite, self.params, self.seed, sorted(self.checks, key=lambda c: c.check_id)
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "params": self.params.as_dict(),
            "seed": self.seed,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def first_witness(cases: Iterable[tuple[bool, str]]) -> str | None:
    """Witness of the first failing case, or None if every case holds."""
    for ok, witness in cases:
        if not ok:
            return witness
    return None
