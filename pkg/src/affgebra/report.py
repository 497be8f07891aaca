"""Check outcome record shared by the verifier and the transforms."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one property check.

    ``counterexample`` is present exactly when ``passed`` is false and
    carries everything needed to re-evaluate the failing instance
    without the original seed.
    """

    check: str
    passed: bool
    trials: int
    counterexample: dict | None
    elapsed_ms: float

    def to_wire(self) -> dict:
        return {
            "check": self.check,
            "passed": self.passed,
            "trials": self.trials,
            "counterexample": self.counterexample,
            "elapsed_ms": self.elapsed_ms,
        }

    @classmethod
    def from_wire(cls, doc: dict) -> "CheckReport":
        return cls(
            check=doc["check"],
            passed=doc["passed"],
            trials=doc["trials"],
            counterexample=doc.get("counterexample"),
            elapsed_ms=doc.get("elapsed_ms", 0.0),
        )
