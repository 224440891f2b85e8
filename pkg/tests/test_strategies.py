from __future__ import annotations

import pytest

from graceful_game.engine import Move, Player, Status, legal_moves, new_game, play_move, status
from graceful_game.errors import NotApplicableError, OffScriptError
from graceful_game.graphs import FamilySpec, build_family
from graceful_game.labeling import is_legal_move
from graceful_game.solver import completable, game_value
from graceful_game.strategies import (
    _SCRIPTS,
    StrategyId,
    forbidden_first_labels,
    replay_counterexample,
    scripted_move,
    verify_strategy,
)

A, B = Player.ALICE, Player.BOB


def sp(family, *params):
    return FamilySpec(family, params)


def test_scripted_openings():
    p5 = new_game(build_family(sp("path", 5)), B)
    assert scripted_move(StrategyId.BOB_PATH, p5) == Move(0, 0)

    w6 = new_game(build_family(sp("wheel", 6)), B)
    assert scripted_move(StrategyId.BOB_WHEEL_FIRST, w6) == Move(6, 6)

    star = new_game(build_family(sp("star", 4)), A)
    assert scripted_move(StrategyId.ALICE_STAR_FIRST, star) == Move(0, 0)

    p3 = new_game(build_family(sp("path", 3)), A)
    assert scripted_move(StrategyId.ALICE_P3_FIRST, p3) == Move(0, 1)


def test_scripted_helm_reply():
    h3 = new_game(build_family(sp("helm", 3)), A)
    h3 = play_move(h3, Move(0, 1))  # hub takes 1
    mv = scripted_move(StrategyId.BOB_HELM, h3)
    assert mv.label == 9 and mv.vertex in (4, 5, 6)  # 3n on a pendant

    h3b = new_game(build_family(sp("helm", 3)), A)
    h3b = play_move(h3b, Move(0, 5))  # hub takes a non-1 label
    mv = scripted_move(StrategyId.BOB_HELM, h3b)
    assert mv.label == 0 and mv.vertex in (4, 5, 6)


def test_scripted_move_always_legal_on_random_lines():
    import random

    rng = random.Random(5)
    cases = [
        (StrategyId.BOB_PATH, sp("path", 6), A),
        (StrategyId.BOB_CYCLE, sp("cycle", 7), B),
        (StrategyId.BOB_HELM, sp("helm", 3), A),
        (StrategyId.BOB_GEAR, sp("gear", 3), B),
    ]
    for sid, fspec, first in cases:
        g = build_family(fspec)
        for _ in range(20):
            st = new_game(g, first)
            while status(st) is Status.IN_PROGRESS:
                if st.to_move is B:
                    try:
                        mv = scripted_move(sid, st)
                    except OffScriptError:
                        break
                    assert is_legal_move(st.labeling, mv.vertex, mv.label)
                    st = play_move(st, mv)
                else:
                    st = play_move(st, rng.choice(legal_moves(st)))


def test_not_applicable_errors():
    p5 = new_game(build_family(sp("path", 5)), B)
    with pytest.raises(NotApplicableError):
        scripted_move(StrategyId.BOB_CYCLE, p5)  # wrong family
    with pytest.raises(NotApplicableError):
        scripted_move(StrategyId.ALICE_P3_FIRST, new_game(build_family(sp("path", 3)), B))
    star = new_game(build_family(sp("star", 3)), A)
    star = play_move(star, Move(0, 0))
    with pytest.raises(NotApplicableError):
        scripted_move(StrategyId.ALICE_STAR_FIRST, star)  # not alice's turn


def test_off_script_surfaces():
    # the square of P4 after an opening the written line does not cover
    g = build_family(sp("path_power", 4, 2))
    st = play_move(new_game(g, A), Move(1, 1))
    with pytest.raises(OffScriptError):
        scripted_move(StrategyId.BOB_PATHPOWER2, st)


def test_verify_agrees_with_solver():
    cases = [
        (StrategyId.BOB_PATH, sp("path", 5), B),
        (StrategyId.ALICE_K3, sp("complete", 3), A),
        (StrategyId.BOB_GEAR, sp("gear", 3), B),
        (StrategyId.ALICE_STAR_FIRST, sp("star", 3), A),
    ]
    for sid, fspec, first in cases:
        verdict = verify_strategy(sid, fspec, first)
        assert verdict.holds
        winner = game_value(new_game(build_family(fspec), first))
        side = A if sid.value.startswith("alice") else B
        assert winner is side


def test_verify_not_applicable():
    with pytest.raises(NotApplicableError):
        verify_strategy(StrategyId.BOB_PATH, sp("path", 3), B)
    with pytest.raises(NotApplicableError):
        verify_strategy(StrategyId.ALICE_STAR_FIRST, sp("star", 4), B)


def test_sabotaged_script_yields_replayable_counterexample(monkeypatch):
    # a Bob "strategy" that just plays the first legal move loses P3
    monkeypatch.setitem(
        _SCRIPTS, StrategyId.BOB_P3_FIRST, lambda ctx, st: min(legal_moves(st))
    )
    verdict = verify_strategy(StrategyId.BOB_P3_FIRST, sp("path", 3), B)
    assert not verdict.holds
    assert verdict.counterexample is not None
    final = replay_counterexample(verdict)
    assert status(final) is Status.ALICE_WON  # the scripted side lost


def test_verdict_json_schema():
    verdict = verify_strategy(StrategyId.BOB_P3_FIRST, sp("path", 3), B)
    data = verdict.to_json()
    assert data["v"] == 1
    assert data["strategy"] == "bob-p3"
    assert data["holds"] is True
    assert data["counterexample"] is None
    assert data["offscript_count"] == 0


def test_forbidden_first_labels_examples(graphs):
    p5 = build_family(sp("path", 5))
    ff = forbidden_first_labels(p5)
    for v in range(5):
        assert (v, 0) in ff and (v, 4) in ff

    w5 = graphs["W5"]
    assert (5, 5) in forbidden_first_labels(w5)  # hub may never take n

    h3 = graphs["H3"]
    ff = forbidden_first_labels(h3)
    for ring_v in (1, 2, 3):
        for l in range(10):
            assert (ring_v, l) in ff

    web = build_family(sp("web", 2, 3))
    ff = forbidden_first_labels(web)
    for outer_v in (4, 5, 6):
        assert all((outer_v, l) in ff for l in range(web.m + 1))

    cat = build_family(sp("caterpillar", 1, 2))
    ff = forbidden_first_labels(cat)
    assert all((0, l) in ff for l in range(5))  # leafy spine vertex
    assert (build_family(sp("path", 1)).m, forbidden_first_labels(build_family(sp("path", 1)))) == (0, frozenset())


def test_forbidden_openings_are_bob_valued(graphs):
    for key in ("P4", "P5", "W4", "H3"):
        g = graphs[key]
        for v, l in sorted(forbidden_first_labels(g)):
            st = new_game(g, A)
            if not is_legal_move(st.labeling, v, l):
                continue
            child = play_move(st, Move(v, l))
            assert game_value(child) is B, (key, v, l)


def test_bipartite_forcing_chain(graphs):
    # the forcing chain: every reply other than the co-extreme next
    # to Bob's 0 is refuted by the script's immediate response, while the
    # forced replies continue the chain with label 1
    g = graphs["K23"]
    st = new_game(g, B)
    opening = scripted_move(StrategyId.BOB_BIPARTITE, st)
    assert opening.label == 0
    st1 = play_move(st, opening)
    forced = []
    for mv in legal_moves(st1):
        child = play_move(st1, mv)
        if mv.label == g.m and g.has_edge(mv.vertex, opening.vertex):
            forced.append(mv)
            assert scripted_move(StrategyId.BOB_BIPARTITE, child).label == 1
        else:
            response = scripted_move(StrategyId.BOB_BIPARTITE, child)
            assert not completable(play_move(child, response))
    assert forced
