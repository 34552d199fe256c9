"""Shared exceptions and the soft work/time budget."""

from __future__ import annotations

import os
import time


class TdlabError(Exception):
    pass


class InputError(TdlabError):
    """Malformed input: bad syntax, out-of-range element, signature mismatch."""


class DomainError(TdlabError):
    """Operation applied outside its stated domain (e.g. td too large)."""


class UnsupportedError(TdlabError):
    """Operation not defined for this logic fragment."""


class BudgetError(TdlabError):
    """Work or wall-clock budget exceeded."""


class InternalCheckError(TdlabError):
    """A built-in cross-check failed; indicates a bug, not bad input."""


class Budget:
    """Counts abstract work items and optionally watches the clock.

    A deadline only ever triggers inside `spend`, so callers must sprinkle
    `spend` through long-running loops.
    """

    def __init__(self, max_items: int | None = None, deadline: float | None = None):
        self.max_items = max_items
        self.deadline = deadline
        self.spent = 0

    @classmethod
    def from_env(cls, max_items: int | None = None) -> "Budget":
        ms = os.environ.get("TDLL_BUDGET_MS")
        deadline = time.monotonic() + int(ms) / 1000.0 if ms else None
        return cls(max_items=max_items, deadline=deadline)

    def spend(self, items: int = 1) -> None:
        self.spent += items
        if self.max_items is not None and self.spent > self.max_items:
            raise BudgetError(f"work budget exceeded ({self.spent} > {self.max_items})")
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetError("wall-clock budget exceeded")


def no_budget() -> Budget:
    return Budget()
