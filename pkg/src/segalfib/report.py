"""Verdicts with certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    """Outcome of a decision procedure.

    ``witness`` is the evidence: on failure a counterexample that can be
    re-checked, on success whatever table certifies the claim (bijections,
    lifts).  ``cost`` counts the cases examined.
    """

    check: str
    passed: bool
    witness: Any = None
    cost: dict[str, int] = field(default_factory=dict)
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def summary(self) -> str:
        costs = ", ".join(f"{k}={v}" for k, v in sorted(self.cost.items()))
        line = f"{self.check}: {self.verdict}"
        if costs:
            line += f" ({costs})"
        if not self.passed and self.witness is not None:
            line += f"; witness {self.witness!r}"
        return line

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "witness": self.witness,
            "cost": dict(self.cost),
            "details": dict(self.details),
        }
