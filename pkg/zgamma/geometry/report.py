"""
Validation reports returned by every geometric check.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional


class CheckStatus(Enum):
    """Outcome of one check."""
    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass
class ValidationReport:
    """
    Result of a single check.

    A failing or warning report always names where the worst offender sits
    (a vertex, a quad, a pair of circles or a sublattice label).
    """
    check: str
    status: CheckStatus
    worst_residual: float = 0.0
    worst_location: Optional[tuple] = None
    counts: Dict[str, int] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status in (CheckStatus.FAIL, CheckStatus.WARN) and self.worst_location is None:
            raise ValueError(f"{self.check}: a {self.status.value} report needs a location")

    @property
    def passed(self) -> bool:
        return self.status is not CheckStatus.FAIL

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            'check': self.check,
            'status': self.status.value,
            'worst_residual': self.worst_residual,
            'worst_location': list(self.worst_location) if self.worst_location is not None else None,
            'counts': dict(self.counts),
            'notes': list(self.notes),
        }

    def __str__(self) -> str:
        where = f" at {self.worst_location}" if self.worst_location is not None else ""
        return f"{self.check}: {self.status.value} (worst {self.worst_residual:.3e}{where})"


@dataclass
class ValidationSummary:
    """All reports of one validation run."""
    reports: List[ValidationReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def get(self, check: str) -> Optional[ValidationReport]:
        for report in self.reports:
            if report.check == check:
                return report
        return None

    def add(self, report: ValidationReport):
        self.reports.append(report)

    def to_dict(self) -> dict:
        return {
            'passed': self.passed,
            'reports': [r.to_dict() for r in self.reports],
        }
