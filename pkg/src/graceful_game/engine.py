"""Turn mechanics for the graceful game.

Alice and Bob alternately assign an unused label from {0..m} to a free
vertex; a move is legal when all induced edge labels stay distinct.  Alice
wins when the whole graph ends up gracefully labeled.  If the player to
move has no legal move before that happens, the graceful completion is
unreachable and the game ends with Bob the winner (no passing).
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

from .errors import GameOverError, IllegalMoveError
from .graphs import Graph
from .labeling import PartialLabeling, apply_move, empty_labeling, is_graceful, is_legal_move


class Player(enum.Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


class Status(enum.Enum):
    IN_PROGRESS = "in-progress"
    ALICE_WON = "alice-won"
    BOB_WON = "bob-won"


class Move(NamedTuple):
    vertex: int
    label: int


@dataclass(frozen=True)
class GameState:
    """Immutable game position; ``play_move`` returns a new state."""

    graph: Graph
    labeling: PartialLabeling
    first_player: Player
    to_move: Player
    history: tuple[tuple[Player, int, int], ...] = ()

    @property
    def m(self) -> int:
        return self.graph.m

    @cached_property
    def _legal_moves(self) -> tuple[Move, ...]:
        pl = self.labeling
        out = []
        for v in pl.free_vertices:
            for l in range(pl.m + 1):
                if not pl.used_labels >> l & 1 and is_legal_move(pl, v, l):
                    out.append(Move(v, l))
        return tuple(out)

    @cached_property
    def _status(self) -> Status:
        if self.labeling.is_total:
            if is_graceful(self.graph, self.labeling.labels):
                return Status.ALICE_WON
            return Status.BOB_WON  # unreachable through legal play
        if not self._legal_moves:
            return Status.BOB_WON
        return Status.IN_PROGRESS

    def to_json(self) -> dict:
        from .graphs import graph_to_json

        st = status(self)
        return {
            "v": 1,
            "graph": graph_to_json(self.graph),
            "labels": list(self.labeling.labels),
            "first": self.first_player.value,
            "to_move": self.to_move.value,
            "history": [
                {"player": p.value, "vertex": v, "label": l} for p, v, l in self.history
            ],
            "status": st.value,
            "winner": {
                Status.ALICE_WON: Player.ALICE.value,
                Status.BOB_WON: Player.BOB.value,
            }.get(st),
            "m": self.m,
        }


def new_game(g: Graph, first: Player) -> GameState:
    return GameState(g, empty_labeling(g), first, first)


def legal_moves(s: GameState) -> tuple[Move, ...]:
    """All (vertex, label) pairs the player to move may play; empty at terminal."""
    return s._legal_moves


def status(s: GameState) -> Status:
    return s._status


def play_move(s: GameState, mv: Move) -> GameState:
    """Apply one move: labeling extended, turn flipped, history appended."""
    if status(s) is not Status.IN_PROGRESS:
        raise GameOverError("the game is already decided")
    v, l = mv
    new_labeling = apply_move(s.labeling, v, l)  # raises IllegalMoveError with reason
    return GameState(
        s.graph,
        new_labeling,
        s.first_player,
        s.to_move.other,
        s.history + ((s.to_move, v, l),),
    )


def replay(g: Graph, first: Player, moves: Iterable[tuple[int, int]]) -> GameState:
    """Rebuild a state by replaying moves from the empty position."""
    s = new_game(g, first)
    for v, l in moves:
        s = play_move(s, Move(v, l))
    return s


def random_playout(s: GameState, rng: random.Random) -> GameState:
    """Play uniformly random legal moves until the game ends."""
    while status(s) is Status.IN_PROGRESS:
        s = play_move(s, rng.choice(legal_moves(s)))
    return s


def random_reachable_state(g: Graph, first: Player, rng: random.Random) -> GameState:
    """A state drawn from a random legal playout prefix (possibly terminal)."""
    s = new_game(g, first)
    steps = rng.randint(0, g.n_vertices)
    for _ in range(steps):
        if status(s) is not Status.IN_PROGRESS:
            break
        s = play_move(s, rng.choice(legal_moves(s)))
    return s
