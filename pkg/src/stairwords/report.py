"""Verification report containers shared by the check suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

PASSING = ("equal", "pass", "zero", "nonzero-as-expected")


@dataclass(frozen=True)
class Case:
    case_id: str
    expected: str
    outcome: str
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.outcome in PASSING

    def line(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        tail = f"  [{self.witness}]" if self.witness and not self.ok else ""
        return f"{mark}  {self.case_id}: {self.expected} -> {self.outcome}{tail}"

    def to_json(self) -> dict:
        return {
            "case": self.case_id,
            "expected": self.expected,
            "outcome": self.outcome,
            "witness": self.witness,
            "ok": self.ok,
        }


@dataclass
class VerificationReport:
    suite: str
    cases: list[Case] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.cases)

    @property
    def n_passed(self) -> int:
        return sum(c.ok for c in self.cases)

    @property
    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.ok]

    def add(self, case: Case) -> Case:
        self.cases.append(case)
        return case

    def extend(self, other: VerificationReport) -> None:
        self.cases.extend(other.cases)

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {self.n_passed}/{len(self.cases)} passed -> {verdict}"

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "n_cases": len(self.cases),
            "n_passed": self.n_passed,
            "cases": [c.to_json() for c in self.cases],
        }


def equality_case(case_id: str, expected: str, lhs, rhs) -> Case:
    if lhs == rhs:
        return Case(case_id, expected, "equal")
    return Case(case_id, expected, "differs", f"lhs={lhs!s}; rhs={rhs!s}"[:400])
