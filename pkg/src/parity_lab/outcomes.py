"""Result records shared by the theorem checks and numeric verifiers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class Status(enum.Enum):
    HOLDS = "holds"
    HYPOTHESES_UNMET = "hypotheses_unmet"
    VIOLATION = "violation"


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one theorem instance.

    A VIOLATION is returned rather than raised so that sweeps can collect
    every would-be counterexample.
    """

    status: Status
    reason: str = ""
    details: dict = field(default_factory=dict, compare=False)

    @classmethod
    def holds(cls, **details) -> "Verdict":
        return cls(Status.HOLDS, "", details)

    @classmethod
    def unmet(cls, reason: str, **details) -> "Verdict":
        return cls(Status.HYPOTHESES_UNMET, reason, details)

    @classmethod
    def violation(cls, reason: str, **details) -> "Verdict":
        return cls(Status.VIOLATION, reason, details)

    @property
    def ok(self) -> bool:
        return self.status is not Status.VIOLATION

    def to_dict(self) -> dict:
        return {"status": self.status.value, "reason": self.reason, "details": self.details}


@dataclass(frozen=True)
class VerificationReport:
    max_residual: float
    tol: float
    samples: int
    passed: bool
    diagnostic: str = ""

    def to_dict(self) -> dict:
        return {
            "residual": self.max_residual,
            "tol": self.tol,
            "samples": self.samples,
            "pass": self.passed,
            "diagnostic": self.diagnostic,
        }


def unit_circle(samples: int, phase: float = 0.1234) -> list[complex]:
    """Sample points on |x| = 1, offset from the real axis."""
    import cmath

    if samples < 1:
        raise ValueError("samples must be >= 1")
    return [cmath.exp(1j * (phase + 2 * cmath.pi * t / samples)) for t in range(samples)]


def relative_gap(a: complex, b: complex) -> float:
    return abs(a - b) / max(1.0, abs(a), abs(b))
