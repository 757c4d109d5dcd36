"""Pass/fail record shared by the identity suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class AxiomReport:
    suite: str
    n_max: int
    passed: bool = True
    checked: int = 0
    counterexample: object = None
    details: list[str] = field(default_factory=list)

    def fail(self, what, witness):
        if self.passed:
            self.passed = False
            self.counterexample = (what, witness)

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.suite} (n<={self.n_max}, {self.checked} checks)"
        if not self.passed:
            what, witness = self.counterexample
            line += f": {what} fails at {witness}"
        return line
