"""Search budgets and interval values.

Every exact search accepts a Budget; exceeding it is not an error but
degrades the result to an interval (status "incomplete"/"interval") with
the best proven bounds and witness. Defaults follow the CLI contract:
10^7 nodes and 60 seconds per invocation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10_000_000
    max_seconds: float = 60.0


DEFAULT_BUDGET = Budget()

# how many nodes between wall-clock checks
_TIME_CHECK_STRIDE = 2048


class BudgetExhausted(Exception):
    """Raised by SearchCounters when a Budget runs out.

    Production searches catch it and degrade their result to a proven
    interval; reference routines with no interval shape (such as
    min_edges_with_tau) let it propagate to the caller."""


class SearchCounters:
    """Node counter with periodic wall-clock checks against a Budget."""

    __slots__ = ("budget", "nodes", "_t0", "_next_check")

    def __init__(self, budget: Budget | None):
        self.budget = budget or DEFAULT_BUDGET
        self.nodes = 0
        self._t0 = time.monotonic()
        self._next_check = _TIME_CHECK_STRIDE

    def tick(self, amount: int = 1) -> None:
        self.nodes += amount
        if self.nodes > self.budget.max_nodes:
            raise BudgetExhausted
        if self.nodes >= self._next_check:
            self._next_check = self.nodes + _TIME_CHECK_STRIDE
            if time.monotonic() - self._t0 > self.budget.max_seconds:
                raise BudgetExhausted


@dataclass(frozen=True)
class Bounds:
    """A proven enclosure [lo, hi] for an integer quantity."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty bounds [{self.lo}, {self.hi}]")

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.exact:
            raise ValueError(f"value of a proper interval [{self.lo}, {self.hi}]")
        return self.lo

    def as_json(self):
        return self.lo if self.exact else [self.lo, self.hi]


def as_bounds(value) -> Bounds:
    """Normalize an int or Bounds to Bounds."""
    if isinstance(value, Bounds):
        return value
    return Bounds(int(value), int(value))


def bounds_agree(a, b) -> bool:
    """Two (possibly interval) values agree iff their enclosures overlap."""
    ba, bb = as_bounds(a), as_bounds(b)
    return ba.lo <= bb.hi and bb.lo <= ba.hi
