"""Acceptance suite: one test per criterion, each printing a PASS line.

Every check is exact (combinatorial equality); run with ``pytest -s`` to see
the per-criterion lines as they pass.
"""

from __future__ import annotations

import random
import time

import pytest

from graceful_game.engine import (
    Move,
    Player,
    Status,
    legal_moves,
    new_game,
    play_move,
    replay,
    status,
)
from graceful_game.graphs import FamilySpec, automorphisms, build_family
from graceful_game.labeling import (
    UP_TO_AUTOMORPHISM,
    canonical_form,
    enumerate_graceful,
    is_graceful,
)
from graceful_game.solver import game_value, solve, solver_for
from graceful_game.strategies import StrategyId, verify_strategy

from conftest import load_golden

A, B = Player.ALICE, Player.BOB


def sp(family, *params):
    return FamilySpec(family, params)


def ok(line: str):
    print(f"ACCEPTANCE PASS: {line}")


# --- criterion 1: winners table ----------------------------------------------

TABLE_EXPECTED = [
    (sp("path", 1), A, A),
    (sp("path", 2), A, A),
    (sp("path", 3), A, B),
    (sp("path", 4), B, B),
    (sp("path", 5), B, B),
    (sp("path", 6), B, B),
    (sp("complete", 3), A, A),
    (sp("complete", 4), B, B),
    (sp("cycle", 4), B, B),
    (sp("cycle", 6), B, B),
    (sp("cycle", 7), B, B),
    (sp("star", 2), A, B),
    (sp("star", 3), A, B),
    (sp("star", 4), A, B),
    (sp("complete_bipartite", 2, 2), B, B),
    (sp("complete_bipartite", 2, 3), B, B),
    (sp("caterpillar", 1, 2), B, B),
    (sp("caterpillar", 2, 2), B, B),
    (sp("wheel", 3), B, B),
    (sp("wheel", 4), B, B),
    (sp("wheel", 5), B, B),
    (sp("helm", 3), B, B),
    (sp("gear", 3), B, B),
    (sp("hypercube", 2), B, B),
    (sp("path_power", 4, 2), B, B),
    (sp("path_power", 5, 2), B, B),
    (sp("prism", 3), B, B),
]


def test_winners_table_reproduction():
    for fspec, alice_first, bob_first in TABLE_EXPECTED:
        g = build_family(fspec)
        t0 = time.monotonic()
        got_a = solve(g, A).winner
        got_b = solve(g, B).winner
        elapsed = time.monotonic() - t0
        assert got_a is alice_first, f"{fspec.label} Alice-first: {got_a}"
        assert got_b is bob_first, f"{fspec.label} Bob-first: {got_b}"
        assert elapsed < 120, f"{fspec.label} took {elapsed:.1f}s"
    ok("winners table: all 27 instances match on both first players")


# --- criterion 2: enumeration golden files -----------------------------------


def _orbit_set(g, labelings):
    autos = automorphisms(g)
    return {canonical_form(f, autos) for f in labelings}


def test_golden_k4_and_c4(graphs):
    for key, fname, expected in (("K4", "k4.txt", 2), ("C4", "c4.txt", 2)):
        g = graphs[key]
        canon = enumerate_graceful(g, UP_TO_AUTOMORPHISM)
        golden = load_golden(fname)
        assert len(canon) == expected
        assert _orbit_set(g, golden) == set(canon)
    ok("K4 and C4 canonical labelings match the reference pairs (count 2 each)")


def test_golden_w4(graphs):
    g = graphs["W4"]
    canon = enumerate_graceful(g, UP_TO_AUTOMORPHISM)
    golden = load_golden("w4.txt")
    assert len(canon) == 8 and len(golden) == 8
    assert _orbit_set(g, golden) == set(canon)
    ok("W4: the eight reference labelings match the enumeration modulo symmetry")


def test_golden_w5_center_zero(graphs):
    g = graphs["W5"]
    canon = enumerate_graceful(g, UP_TO_AUTOMORPHISM)
    center0 = {f for f in canon if f[5] == 0}
    golden = load_golden("w5_center0.txt")
    assert len(center0) == 4
    assert _orbit_set(g, golden) == center0
    ok("W5: exactly four hub-0 labelings, matching the reference list")


def test_golden_g3_ring_edge(graphs):
    g = graphs["G3"]
    canon = enumerate_graceful(g, UP_TO_AUTOMORPHISM)

    def ring_edge_m(f):
        z, top = f.index(0), f.index(g.m)
        return z != 3 and top != 3 and g.has_edge(z, top)

    filtered = {f for f in canon if ring_edge_m(f)}
    golden = load_golden("g3_ring_edge_m.txt")
    assert len(filtered) == 40 and len(golden) == 40
    assert _orbit_set(g, golden) == filtered
    ok("G3: all forty ring-edge-9 labelings match modulo symmetry")


def test_golden_p32(graphs):
    g = graphs["P32"]
    canon = enumerate_graceful(g, UP_TO_AUTOMORPHISM)
    golden = load_golden("p32.txt")
    assert len(golden) == 10
    assert all(is_graceful(g, f) for f in golden)
    # the reference list of ten contains two symmetric duplicate pairs, so
    # the orbit sets must coincide in both directions (eight orbits)
    golden_orbits = _orbit_set(g, golden)
    assert golden_orbits == set(canon)
    assert len(canon) == 8
    ok(
        "P{3,2}: reference list (10 rows, 8 orbits) equals the enumeration "
        "modulo symmetry in both directions"
    )


# --- criterion 3: gracefulness criteria ---------------------------------------


def test_cycle_gracefulness_criterion():
    for n in range(3, 12):
        nonempty = bool(enumerate_graceful(build_family(sp("cycle", n))))
        assert nonempty == (n % 4 in (0, 3)), f"C{n}"
    ok("cycles C3..C11 graceful exactly when n = 0,3 (mod 4)")


def test_complete_gracefulness_criterion():
    for n in range(2, 6):
        nonempty = bool(enumerate_graceful(build_family(sp("complete", n))))
        assert nonempty == (n <= 4), f"K{n}"
    ok("complete graphs K2..K5 graceful exactly when n <= 4")


def test_trees_always_graceful():
    for n in range(2, 9):
        assert enumerate_graceful(build_family(sp("path", n))), f"P{n}"
    for q in range(1, 7):
        assert enumerate_graceful(build_family(sp("star", q))), f"K(1,{q})"
    for ks in [(1, 2), (2, 2), (2, 0, 2), (1, 2, 1), (3, 3), (2, 2, 2), (1, 1, 1, 1)]:
        g = build_family(sp("caterpillar", *ks))
        assert g.m <= 9
        assert enumerate_graceful(g), f"cat{ks}"
    ok("paths P2..P8, stars K(1,1)..K(1,6) and small caterpillars all graceful")


# --- criterion 4: strategy verification ----------------------------------------

VERIFICATION_MATRIX = [
    (StrategyId.ALICE_P1P2, sp("path", 1), (A, B)),
    (StrategyId.ALICE_P1P2, sp("path", 2), (A, B)),
    (StrategyId.ALICE_P3_FIRST, sp("path", 3), (A,)),
    (StrategyId.BOB_P3_FIRST, sp("path", 3), (B,)),
    (StrategyId.BOB_PATH, sp("path", 4), (A, B)),
    (StrategyId.BOB_PATH, sp("path", 5), (A, B)),
    (StrategyId.BOB_PATH, sp("path", 6), (A, B)),
    (StrategyId.BOB_PATH, sp("path", 7), (A, B)),
    (StrategyId.ALICE_K3, sp("complete", 3), (A, B)),
    (StrategyId.BOB_K4, sp("complete", 4), (A, B)),
    (StrategyId.BOB_CYCLE, sp("cycle", 4), (A, B)),
    (StrategyId.BOB_CYCLE, sp("cycle", 6), (A, B)),
    (StrategyId.BOB_CYCLE, sp("cycle", 7), (A, B)),
    (StrategyId.ALICE_STAR_FIRST, sp("star", 2), (A,)),
    (StrategyId.ALICE_STAR_FIRST, sp("star", 3), (A,)),
    (StrategyId.ALICE_STAR_FIRST, sp("star", 4), (A,)),
    (StrategyId.BOB_BIPARTITE, sp("complete_bipartite", 2, 2), (A, B)),
    (StrategyId.BOB_BIPARTITE, sp("complete_bipartite", 2, 3), (A, B)),
    (StrategyId.BOB_CATERPILLAR, sp("caterpillar", 1, 2), (A, B)),
    (StrategyId.BOB_CATERPILLAR, sp("caterpillar", 2, 2), (A, B)),
    (StrategyId.BOB_CATERPILLAR, sp("caterpillar", 2, 0, 2), (A, B)),
    (StrategyId.BOB_WHEEL_W3W4W5, sp("wheel", 3), (A, B)),
    (StrategyId.BOB_WHEEL_W3W4W5, sp("wheel", 4), (A, B)),
    (StrategyId.BOB_WHEEL_W3W4W5, sp("wheel", 5), (A, B)),
    (StrategyId.BOB_WHEEL_FIRST, sp("wheel", 6), (B,)),
    (StrategyId.BOB_GEAR, sp("gear", 3), (A, B)),
    (StrategyId.BOB_HELM, sp("helm", 3), (A, B)),
    (StrategyId.BOB_WEB, sp("web", 2, 3), (A, B)),
    (StrategyId.BOB_HYPERCUBE, sp("hypercube", 2), (A, B)),
    (StrategyId.BOB_HYPERCUBE, sp("hypercube", 3), (B, A)),
    (StrategyId.BOB_PRISM, sp("prism", 3), (A, B)),
    (StrategyId.BOB_PRISM, sp("prism", 4), (A, B)),
    (StrategyId.BOB_PATHPOWER2, sp("path_power", 4, 2), (A, B)),
    (StrategyId.BOB_PATHPOWER2, sp("path_power", 5, 2), (A, B)),
    (StrategyId.BOB_PATHPOWER2, sp("path_power", 6, 2), (A, B)),
    (StrategyId.BOB_PATHPOWER2, sp("path_power", 7, 2), (A, B)),
]


def test_strategy_verification_matrix():
    t_suite = time.monotonic()
    checked = 0
    for sid, fspec, firsts in VERIFICATION_MATRIX:
        for first in firsts:
            verdict = verify_strategy(sid, fspec, first)
            assert verdict.holds, (
                f"{sid.value} on {fspec.label} ({first.value} first): "
                f"counterexample {verdict.counterexample}"
            )
            checked += 1
    elapsed = time.monotonic() - t_suite
    assert elapsed < 3600
    ok(f"strategy verification: {checked} (strategy, instance, first) pairs hold "
       f"in {elapsed:.0f}s")


def test_failed_verification_replays_to_a_loss(monkeypatch):
    from graceful_game import strategies
    from graceful_game.cli import main
    from graceful_game.strategies import replay_counterexample

    monkeypatch.setitem(
        strategies._SCRIPTS, StrategyId.BOB_P3_FIRST, lambda ctx, st: min(legal_moves(st))
    )
    code = main(["verify", "--strategy", "bob-p3", "--first", "bob"])
    assert code == 1
    verdict = verify_strategy(StrategyId.BOB_P3_FIRST, sp("path", 3), B)
    assert not verdict.holds
    final = replay_counterexample(verdict)
    assert status(final) is Status.ALICE_WON
    ok("a failing verification exits 1 and its counterexample replays to a loss")


# --- criterion 5: forcing-rule suites -----------------------------------------

RULE_GRAPH_KEYS = ("P4", "P5", "P6", "K13", "W4")


@pytest.fixture(scope="module")
def rule_graphs():
    return {
        "P4": build_family(sp("path", 4)),
        "P5": build_family(sp("path", 5)),
        "P6": build_family(sp("path", 6)),
        "K13": build_family(sp("star", 3)),
        "W4": build_family(sp("wheel", 4)),
    }


def test_extreme_openings_rule(rule_graphs):
    count = 0
    for key in RULE_GRAPH_KEYS:
        g = rule_graphs[key]
        for v in range(g.n_vertices):
            if g.degree(v) == g.n_vertices - 1:
                continue  # adjacent to every other vertex: the rule allows it
            for l in (0, g.m):
                child = play_move(new_game(g, A), Move(v, l))
                assert game_value(child) is B, (key, v, l)
                count += 1
    ok(f"extreme-opening rule: {count} openings all solver-confirmed losing")


def _forced_reply_states(key, g):
    """A state where Bob just played 0 on a vertex with one free neighbor."""
    if key in ("P4", "P5", "P6"):
        st = new_game(g, B)
        return play_move(st, Move(0, 0)), 1  # end vertex; forced at v1
    if key == "K13":
        st = new_game(g, B)
        return play_move(st, Move(1, 0)), 0  # leaf; forced at the hub
    # W4: occupy two ring neighbors first so v0 has one free neighbor (the hub)
    st = replay(g, B, [(1, 2), (3, 7)])
    return play_move(st, Move(0, 0)), 4


def test_forced_coextreme_rule(rule_graphs):
    count = 0
    for key in RULE_GRAPH_KEYS:
        g = rule_graphs[key]
        st, forced_vertex = _forced_reply_states(key, g)
        exception = Move(forced_vertex, g.m)
        for mv in legal_moves(st):
            if mv == exception:
                continue
            assert game_value(play_move(st, mv)) is B, (key, mv)
            count += 1
    ok(f"forced co-extreme rule: {count} non-forced replies all solver-confirmed losing")


def test_hub_never_takes_n():
    for n in (4, 5):
        g = build_family(sp("wheel", n))
        raw = enumerate_graceful(g)
        assert raw
        assert all(f[n] != n for f in raw)
    ok("wheel hub never carries label n in any W4/W5 graceful labeling")


# --- criterion 6: solver self-consistency ---------------------------------------


def _random_reachable(g, rng):
    st = new_game(g, rng.choice([A, B]))
    for _ in range(rng.randint(0, g.n_vertices)):
        if status(st) is not Status.IN_PROGRESS:
            break
        st = play_move(st, rng.choice(legal_moves(st)))
    return st


def test_complement_symmetry_1000_states():
    rng = random.Random(2024)
    keys = [fspec for fspec, _, _ in TABLE_EXPECTED if build_family(fspec).m <= 9]
    checked = 0
    while checked < 1000:
        fspec = keys[checked % len(keys)]
        g = build_family(fspec)
        st = _random_reachable(g, rng)
        if status(st) is not Status.IN_PROGRESS:
            continue
        mirrored = replay(g, st.first_player, [(v, g.m - l) for _, v, l in st.history])
        assert game_value(st, use_symmetry=False) is game_value(
            mirrored, use_symmetry=False
        ), (fspec.label, st.history)
        checked += 1
    ok("complement symmetry: 1000 random reachable states keep their game value")


def test_automorphism_invariance_1000_states():
    rng = random.Random(4096)
    pool = [
        (build_family(fspec), automorphisms(build_family(fspec)))
        for fspec, _, _ in TABLE_EXPECTED
        if build_family(fspec).n_vertices <= 8
    ]
    checked = 0
    while checked < 1000:
        g, autos = pool[checked % len(pool)]
        st = _random_reachable(g, rng)
        if status(st) is not Status.IN_PROGRESS:
            continue
        perm = rng.choice(autos)
        relabeled = replay(g, st.first_player, [(perm[v], l) for _, v, l in st.history])
        assert game_value(st, use_symmetry=False) is game_value(
            relabeled, use_symmetry=False
        ), (g.family.label, st.history, perm)
        checked += 1
    ok("automorphism invariance: 1000 random reachable states keep their game value")


def test_memoization_on_off_agreement():
    small = [fspec for fspec, _, _ in TABLE_EXPECTED if build_family(fspec).m <= 6]
    assert small
    for fspec in small:
        g = build_family(fspec)
        for first in (A, B):
            assert solve(g, first).winner is solve(g, first, use_memo=False).winner, fspec.label
    ok(f"memoization on/off agreement on all {len(small)} table instances with m <= 6")
