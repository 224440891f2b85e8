"""Exception types shared across the engine."""

from __future__ import annotations


class GracefulGameError(Exception):
    """Base class for all engine errors."""


class InvalidParamsError(GracefulGameError):
    """Family parameters outside their validity bounds."""


class TooLargeError(GracefulGameError):
    """Graph exceeds the size cap of an exact computation."""


class SizeMismatchError(GracefulGameError):
    """A labeling vector does not match the graph's vertex count."""


class NotGracefulError(GracefulGameError):
    """An operation requiring a graceful labeling received a non-graceful one."""


class IllegalMoveError(GracefulGameError):
    """A move that violates the game rules.

    ``reason`` is machine readable: ``vertex-occupied``, ``label-used``,
    ``edge-label-clash`` or ``out-of-range``.
    """

    def __init__(self, reason: str, message: str | None = None):
        self.reason = reason
        super().__init__(message or reason)


class NotYourTurnError(GracefulGameError):
    """Service-level misuse: a player moved out of turn."""


class GameOverError(GracefulGameError):
    """A move was attempted on a finished game."""


class BudgetExceededError(GracefulGameError):
    """A search ran past its node-expansion budget.

    Carries partial statistics so callers can report how far the search got.
    """

    def __init__(self, nodes_expanded: int, cap: int):
        self.nodes_expanded = nodes_expanded
        self.cap = cap
        super().__init__(f"node budget exhausted ({nodes_expanded} >= {cap})")


class NotApplicableError(GracefulGameError):
    """A scripted strategy was asked about a graph, side or turn it does not cover."""


class OffScriptError(GracefulGameError):
    """The state is legal but outside the cases a scripted strategy handles."""
