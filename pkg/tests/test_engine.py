from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hs

from graceful_game.engine import (
    Move,
    Player,
    Status,
    legal_moves,
    new_game,
    play_move,
    random_playout,
    replay,
    status,
)
from graceful_game.errors import GameOverError, IllegalMoveError
from graceful_game.graphs import FamilySpec, build_family


def sp(family, *params):
    return FamilySpec(family, params)


def test_new_game(graphs):
    s = new_game(graphs["P3"], Player.ALICE)
    assert len(s.labeling.free_vertices) == 3
    assert s.to_move is Player.ALICE
    k4 = new_game(graphs["K4"], Player.BOB)
    assert k4.m == 6  # labels 0..6 available
    w4 = new_game(graphs["W4"], Player.ALICE)
    assert w4.m == 8  # labels 0..8 available


def test_legal_moves(graphs):
    k3 = new_game(graphs["K3"], Player.BOB)
    k3 = play_move(k3, Move(0, 1))
    k3 = play_move(k3, Move(1, 0))
    assert legal_moves(k3) == (Move(2, 3),)
    p2 = new_game(graphs["P2"], Player.ALICE)
    assert len(legal_moves(p2)) == 4  # 2 vertices x labels {0,1}
    done = play_move(play_move(p2, Move(0, 0)), Move(1, 1))
    assert legal_moves(done) == ()


def test_play_to_alice_win(graphs):
    s = new_game(graphs["P2"], Player.ALICE)
    s = play_move(s, Move(0, 0))
    s = play_move(s, Move(1, 1))
    assert status(s) is Status.ALICE_WON

    k3 = new_game(graphs["K3"], Player.BOB)
    for mv in [Move(0, 1), Move(1, 0), Move(2, 3)]:
        k3 = play_move(k3, mv)
    assert status(k3) is Status.ALICE_WON


def test_play_errors(graphs):
    s = new_game(graphs["K3"], Player.BOB)
    s = play_move(s, Move(0, 1))
    s = play_move(s, Move(1, 0))
    with pytest.raises(IllegalMoveError) as err:
        play_move(s, Move(2, 2))
    assert err.value.reason == "edge-label-clash"
    s = play_move(s, Move(2, 3))
    with pytest.raises(GameOverError):
        play_move(s, Move(0, 0))


def test_deadlock_is_bob_win(graphs):
    # a position with free vertices but no legal move
    s = new_game(graphs["C5"], Player.BOB)
    for mv in [Move(0, 0), Move(2, 5), Move(1, 4), Move(3, 2)]:
        s = play_move(s, mv)
    # v4 adjacent to 2@v3 and 0@v0; both remaining labels clash
    assert status(s) is Status.BOB_WON
    assert legal_moves(s) == ()
    assert not s.labeling.is_total


def test_turns_alternate_and_history_tracks(graphs):
    s = new_game(graphs["P4"], Player.BOB)
    s = play_move(s, Move(0, 0))
    assert s.to_move is Player.ALICE
    s = play_move(s, Move(1, 3))
    assert s.to_move is Player.BOB
    assert [p for p, _, _ in s.history] == [Player.BOB, Player.ALICE]


@settings(max_examples=30, deadline=None)
@given(seed=hs.integers(0, 10**6))
def test_playouts_terminate_and_replay_exactly(seed):
    rng = random.Random(seed)
    fspec = rng.choice(
        [sp("path", 5), sp("cycle", 5), sp("cycle", 7), sp("wheel", 4),
         sp("complete", 4), sp("helm", 3), sp("prism", 3)]
    )
    g = build_family(fspec)
    first = rng.choice([Player.ALICE, Player.BOB])
    final = random_playout(new_game(g, first), rng)
    assert status(final) in (Status.ALICE_WON, Status.BOB_WON)
    assert len(final.history) <= g.n_vertices
    rebuilt = replay(g, first, [(v, l) for _, v, l in final.history])
    assert rebuilt == final  # bit-for-bit


def test_non_graceful_graphs_always_end_bob(graphs):
    rng = random.Random(7)
    k5 = build_family(sp("complete", 5))
    for g in (graphs["C5"], k5):
        for _ in range(25):
            final = random_playout(new_game(g, rng.choice([Player.ALICE, Player.BOB])), rng)
            assert status(final) is Status.BOB_WON


def test_state_json_schema(graphs):
    s = play_move(new_game(graphs["P2"], Player.BOB), Move(1, 0))
    data = s.to_json()
    assert data["v"] == 1
    assert data["labels"] == [None, 0]
    assert data["history"] == [{"player": "bob", "vertex": 1, "label": 0}]
    assert data["status"] == "in-progress"
    assert data["winner"] is None
