"""Uniform result record for every verified inequality."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class ConsistencyRecord:
    """Outcome of evaluating one predicate on one subject.

    ``lhs`` and ``rhs`` are the two sides of the comparison, always exact
    integers (cross-multiplied where the original statement is rational).
    ``passed`` is meaningful only when ``applicable`` is true.
    """

    predicate: str
    subject: str
    lhs: int
    rhs: int
    applicable: bool
    passed: Optional[bool]
    detail: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.applicable and self.passed is None:
            raise ValueError("applicable records need a pass/fail outcome")
        if not self.applicable and self.passed is not None:
            raise ValueError("pass/fail is defined only when applicable")

    @property
    def failed(self) -> bool:
        return self.applicable and not self.passed


def not_applicable(predicate: str, subject: str, **detail) -> ConsistencyRecord:
    return ConsistencyRecord(predicate, subject, 0, 0, False, None, detail)
