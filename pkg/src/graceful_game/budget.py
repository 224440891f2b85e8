"""Node-expansion budgets for exact searches.

Budgets count node expansions, not wall-clock time, so failures reproduce.
The environment variable ``GRACEFUL_BUDGET`` overrides the default cap.
"""

from __future__ import annotations

import os

from .errors import BudgetExceededError

DEFAULT_NODE_CAP = 10**9


def default_cap() -> int:
    env = os.environ.get("GRACEFUL_BUDGET")
    return int(env) if env else DEFAULT_NODE_CAP


class Budget:
    """Counts search-node expansions and raises when the cap is hit."""

    __slots__ = ("cap", "used")

    def __init__(self, cap: int | None = None):
        self.cap = default_cap() if cap is None else int(cap)
        self.used = 0

    def tick(self, n: int = 1):
        self.used += n
        if self.used > self.cap:
            raise BudgetExceededError(self.used, self.cap)

    def remaining(self) -> int:
        return max(0, self.cap - self.used)
