"""Shared resource limits.

Every enumeration-style operation takes its default budget from this module;
the command line and survey drivers override them per invocation.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ENUMERATION_CAP = 1 << 26  # max codewords walked per enumeration
DEFAULT_ELEMENT_CAP = 10**7  # max group elements walked per exhaustive check
DEFAULT_COSET_CAP = 20  # max irreducible-factor count for ideal enumeration


@dataclass(frozen=True, slots=True)
class SurveyConfig:
    """Knobs for batch analysis runs."""

    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    element_cap: int = DEFAULT_ELEMENT_CAP
    coset_cap: int = DEFAULT_COSET_CAP
    time_budget: float | None = None  # seconds allotted per analyzed code
    out_path: str | None = None
    workers: int = 1
    seed: int = 0

    def __post_init__(self) -> None:
        if min(self.enumeration_cap, self.element_cap, self.coset_cap) <= 0:
            raise ValueError("caps must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time budget must be positive")
