"""Scripted winning strategies and their exhaustive verification.

Each strategy transcribes a constructive winning line for one graph family:
the scripted side follows a short forcing sequence built around the extreme
labels 0 and m (the only pair that can produce the edge label m), ending in
a position with no graceful completion.  Scripts are pure functions of the
current state; when a state falls outside the cases a script covers it
reports OFFSCRIPT and the verifier falls back to the perfect-play solver,
counting the fallback in the verdict.

Two structural facts do most of the punishing work:

* extreme-opening punishment: if the opponent puts 0 (or m) on a vertex
  with a free non-neighbor while the co-extreme is unused, answering with
  the co-extreme on a free non-neighbor makes the edge label m unreachable;
* forced co-extreme: after 0 lands on a vertex whose only free neighbor is
  u (or with two free non-neighbors), only m at a neighbor keeps the game
  alive, so every other reply is dead and the verifier prunes it.

After a script's killing move the position has no graceful completion, so
any legal move preserves the win; scripts then play the lexicographically
least legal move.  ``_finish_dead`` double-checks the no-completion claim
and reports OFFSCRIPT instead if the claim fails, keeping scripts honest.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .budget import Budget
from .engine import (
    GameState,
    Move,
    Player,
    Status,
    legal_moves,
    new_game,
    play_move,
    status,
)
from .errors import NotApplicableError, OffScriptError
from .graphs import FamilySpec, Graph, build_family
from .labeling import graceful_labelings, is_legal_move
from . import solver as solver_mod

OFFSCRIPT = object()


class StrategyId(str, enum.Enum):
    ALICE_P1P2 = "alice-p1p2"
    ALICE_P3_FIRST = "alice-p3"
    ALICE_K3 = "alice-k3"
    ALICE_STAR_FIRST = "alice-star"
    BOB_PATH = "bob-path"
    BOB_P3_FIRST = "bob-p3"
    BOB_K4 = "bob-k4"
    BOB_CYCLE = "bob-cycle"
    BOB_BIPARTITE = "bob-bipartite"
    BOB_CATERPILLAR = "bob-caterpillar"
    BOB_WHEEL_FIRST = "bob-wheel-first"
    BOB_WHEEL_W3W4W5 = "bob-wheel-345"
    BOB_GEAR = "bob-gear"
    BOB_HELM = "bob-helm"
    BOB_WEB = "bob-web"
    BOB_HYPERCUBE = "bob-hypercube"
    BOB_PRISM = "bob-prism"
    BOB_PATHPOWER2 = "bob-pathpower2"


# ---------------------------------------------------------------------------
# cached labeling facts used by the table-driven kills


@lru_cache(maxsize=None)
def _poison_labels(g: Graph) -> tuple[int, ...]:
    """Labels that appear in no graceful labeling of g at all."""
    raw = graceful_labelings(g)
    return tuple(l for l in range(g.m + 1) if all(l not in f for f in raw))


@lru_cache(maxsize=None)
def _poison_given_vertex(g: Graph, v: int, lab: int) -> tuple[int, ...]:
    """Labels absent from every graceful labeling that assigns lab to v."""
    raw = [f for f in graceful_labelings(g) if f[v] == lab]
    return tuple(l for l in range(g.m + 1) if all(l not in f for f in raw))


@lru_cache(maxsize=None)
def _never_adjacent(g: Graph, x: int) -> tuple[int, ...]:
    """Labels y such that no graceful labeling of g puts x and y on adjacent vertices."""
    raw = graceful_labelings(g)
    bad = set(range(g.m + 1)) - {x}
    for f in raw:
        for u, v in g.edges:
            if f[u] == x:
                bad.discard(f[v])
            elif f[v] == x:
                bad.discard(f[u])
    return tuple(sorted(bad))


@lru_cache(maxsize=None)
def _dead_extreme_near(g: Graph, v: int, lab: int) -> int | None:
    """An extreme e (0 or m) such that no graceful labeling has lab at v with
    e on a neighbor of v; placing e next to v then kills the game."""
    raw = graceful_labelings(g)
    for e in (0, g.m):
        ok = True
        for f in raw:
            if f[v] != lab:
                continue
            if any(f[u] == e for u in g.adjacency[v]):
                ok = False
                break
        if not ok:
            continue
        return e
    return None


# ---------------------------------------------------------------------------
# script building blocks


def _own(st: GameState, side: Player):
    return [(v, l) for p, v, l in st.history if p is side]


def _opp(st: GameState, side: Player):
    return [(v, l) for p, v, l in st.history if p is not side]


def _first_legal(st: GameState):
    moves = legal_moves(st)
    return min(moves) if moves else OFFSCRIPT


def _finish_dead(st: GameState):
    """The script claims no graceful completion exists: verify, then play anything."""
    if solver_mod.completable(st):
        return OFFSCRIPT
    return _first_legal(st)


def _try_moves(st: GameState, candidates):
    """First legal (vertex, label) among candidates; else the position must be dead."""
    for v, l in candidates:
        if v is not None and is_legal_move(st.labeling, v, l):
            return Move(v, l)
    return _finish_dead(st)


def _place_label(st: GameState, label: int, vertices=None):
    g = st.graph
    pool = vertices if vertices is not None else range(g.n_vertices)
    return _try_moves(st, [(v, label) for v in pool if st.labeling.labels[v] is None])


def _free_non_neighbors(st: GameState, v: int):
    g = st.graph
    return [
        x
        for x in range(g.n_vertices)
        if x != v and st.labeling.labels[x] is None and not g.has_edge(x, v)
    ]


def _punish_opening(st: GameState):
    """Answer an extreme opening (0 or m on a vertex with a free non-neighbor)
    with the co-extreme on a free non-neighbor; the edge label m then never forms."""
    (va, i) = _opp(st, st.to_move)[0]
    m = st.graph.m
    co = m - i
    if st.labeling.label_used(co):
        return _finish_dead(st)
    cands = _free_non_neighbors(st, va)
    if not cands:
        return OFFSCRIPT
    return _try_moves(st, [(x, co) for x in cands])


def _forced_coextreme(st: GameState, zero_v: int, zero_l: int):
    """The opponent's only live reply to our extreme at zero_v: the co-extreme
    on a neighbor of zero_v.  Returns that (vertex, label) if it was just
    played, else None."""
    last = st.history[-1]
    _, v, l = last
    if l == st.graph.m - zero_l and st.graph.has_edge(v, zero_v):
        return v
    return None


def _punish_unforced_reply(st: GameState, zero_v: int, zero_l: int):
    """The opponent ignored the forced co-extreme reply to our extreme at
    zero_v.  Either placing the co-extreme on a free non-neighbor or plugging
    zero_v's last free neighbor with junk kills the edge label m for good.
    If the co-extreme is already placed it must sit off zero_v's
    neighborhood, so the position is dead as it stands."""
    g = st.graph
    co = g.m - zero_l
    if st.labeling.label_used(co):
        return _finish_dead(st)
    for x in _free_non_neighbors(st, zero_v):
        if is_legal_move(st.labeling, x, co):
            return Move(x, co)
    free_nbrs = [u for u in g.adjacency[zero_v] if st.labeling.labels[u] is None]
    if len(free_nbrs) == 1:
        u = free_nbrs[0]
        for l in range(g.m + 1):
            if l != co and is_legal_move(st.labeling, u, l):
                return Move(u, l)
    return _finish_dead(st)


# ---------------------------------------------------------------------------
# per-family scripts; each returns a Move or OFFSCRIPT



def _first_deadening(st: GameState, candidates):
    """First legal candidate whose child position has no graceful completion.

    Used where a winning line says "some value in this range blocks": the
    blocking value is found by checking the claim, not by game search.
    """
    for v, l in candidates:
        if v is None or not is_legal_move(st.labeling, v, l):
            continue
        child = play_move(st, Move(v, l))
        if not solver_mod.completable(child):
            return Move(v, l)
    return OFFSCRIPT


def _punish_if_extreme(st: GameState):
    """OM1 fallback: if our previous move was an extreme threat, punish the
    unforced reply; otherwise hand the state to the solver."""
    own0 = _own(st, Player.BOB)[0]
    if own0[1] in (0, st.graph.m):
        return _punish_unforced_reply(st, own0[0], own0[1])
    return OFFSCRIPT

def _script_p1p2(ctx, st):
    side = st.to_move
    own = _own(st, side)
    if own:
        return OFFSCRIPT
    if st.graph.n_vertices == 1:
        return Move(0, 0)
    if not st.history:
        return Move(0, 0)
    (_, v, l) = st.history[-1]
    other = 1 - v
    return _try_moves(st, [(other, 1 - l)])


def _script_alice_p3(ctx, st):
    own = _own(st, Player.ALICE)
    if not own:
        return Move(0, 1)
    if len(own) == 1:
        free = [v for v in range(3) if st.labeling.labels[v] is None]
        unused = [l for l in range(3) if not st.labeling.label_used(l)]
        if len(free) == 1 and len(unused) == 1:
            return _try_moves(st, [(free[0], unused[0])])
    return OFFSCRIPT


def _script_bob_p3(ctx, st):
    if not _own(st, Player.BOB):
        return Move(1, 1)
    return _finish_dead(st)


def _triangle_script(ctx, st):
    """Alice's play on any triangle (labels 0..3)."""
    own = _own(st, Player.ALICE)
    if not st.history:
        return Move(0, 0)
    if not own:  # Bob opened
        (_, v, l) = st.history[0]
        reply = {0: 3, 3: 0, 1: 0, 2: 3}.get(l)
        if reply is None:
            return OFFSCRIPT
        return _place_label(st, reply)
    if len(own) == 1:
        free = [v for v in range(3) if st.labeling.labels[v] is None]
        if len(free) != 1:
            return OFFSCRIPT
        for l in (3, 1, 2):
            if not st.labeling.label_used(l) and is_legal_move(st.labeling, free[0], l):
                return Move(free[0], l)
    return OFFSCRIPT


def _path_script(ctx, st, line):
    """Breaker play along a path given as the vertex sequence ``line``."""
    g, m = st.graph, st.graph.m
    side = Player.BOB
    own = _own(st, side)
    n = len(line)
    if len(own) >= 2:
        return _finish_dead(st)
    if st.first_player is Player.BOB:
        if not own:
            return Move(line[0], 0)
        # expected: the forced m next to our 0
        if st.history[-1][1:] == (line[1], m):
            return _try_moves(st, [(line[2], 2)])
        return _punish_unforced_reply(st, line[0], 0)
    # Alice opened
    (va, i) = _opp(st, side)[0]
    j = line.index(va)
    if not own:
        if i in (0, m):
            return _punish_opening(st)
        if n == 4:
            target = {0: line[1], 3: line[2], 1: line[0], 2: line[3]}[j]
            return _try_moves(st, [(target, 0)])
        # attack with 0 unless the opening is m-1, whose complement line
        # (attack with m) keeps the threatened edge label m-1 unformed
        ext = m if i == m - 1 else 0
        # prefer an end neighbor: the extreme there has no live answer at all
        nbr = min(g.adjacency[va], key=lambda u: (g.degree(u), u))
        return _try_moves(st, [(nbr, ext)])
    # one own move made
    if i in (0, m) or n == 4:
        return _finish_dead(st)
    (zv, zl) = own[0]
    others = [u for u in g.adjacency[zv] if u != va]
    if not others:  # our extreme sits on an end vertex: already dead
        return _finish_dead(st)
    u = others[0]
    if st.history[-1][1:] == (u, m - zl):
        if i in (1, m - 1):
            return _finish_dead(st)
        free_u_nbrs = [x for x in g.adjacency[u] if st.labeling.labels[x] is None]
        if not free_u_nbrs:
            return _finish_dead(st)
        return _try_moves(st, [(x, 1) for x in _free_non_neighbors(st, u)])
    return _punish_unforced_reply(st, zv, zl)


def _k4_poison_script(ctx, st):
    """Breaker play on a graph with a label no graceful labeling uses."""
    poison = _poison_labels(st.graph)
    if not poison:
        return OFFSCRIPT
    p = poison[0]
    if st.labeling.label_used(p):
        return _finish_dead(st)
    if len(_own(st, Player.BOB)) >= 1:
        return _finish_dead(st)
    return _place_label(st, p)


def _cycle_script(ctx, st, ring):
    g, m = st.graph, st.graph.m
    side = Player.BOB
    own = _own(st, side)
    n = len(ring)
    at = {v: k for k, v in enumerate(ring)}

    def R(k):
        return ring[k % n]

    if len(own) >= 2:
        return _finish_dead(st)
    if st.first_player is Player.BOB:
        if n == 4:
            # a four-ring holds no graceful labeling using both 1 and m-1;
            # claim one, then the other
            if not own:
                return Move(R(0), 1)
            return _place_label(st, m - 1)
        if not own:
            return Move(R(0), 0)
        last = st.history[-1][1:]
        if last == (R(1), m):
            return _try_moves(st, [(R(2), m - 1)])
        if last == (R(-1), m):
            return _try_moves(st, [(R(-2), m - 1)])
        return _punish_unforced_reply(st, R(0), 0)
    (va, i) = _opp(st, side)[0]
    j = at.get(va)
    if j is None:
        return OFFSCRIPT
    if not own:
        if i in (0, m):
            return _punish_opening(st)
        if n == 4:
            if i == 2:
                return _try_moves(st, [(R(j + 2), 1)])
            return _place_label(st, m - i)
        if i == 1:
            return _try_moves(st, [(R(j + 1), 0)])
        return _try_moves(st, [(R(j + 3), 0)])
    if i in (0, m) or n == 4:
        return _finish_dead(st)
    last = st.history[-1][1:]
    if i == 1:
        if last == (R(j + 2), m):
            return _finish_dead(st)
        return _punish_unforced_reply(st, R(j + 1), 0)
    if last == (R(j + 4), m):
        return _try_moves(st, [(R(j + 2), 1)])
    if last == (R(j + 2), m):
        return _try_moves(st, [(R(j + 4), 1)])
    return _punish_unforced_reply(st, R(j + 3), 0)


def _bipartite_script(ctx, st):
    g, m = st.graph, st.graph.m
    p, q = g.family.params
    X = list(range(p))
    Y = list(range(p, p + q))
    if p == 2 and q == 2:
        return _cycle_script(ctx, st, [0, 2, 1, 3])
    side = Player.BOB
    own = _own(st, side)

    def part_of(v):
        return (X, Y) if v < p else (Y, X)

    def round_engine(zero_vertex, zero_label, round_part, flip, collide):
        """Forcing rounds after our extreme at zero_vertex: we put ascending
        labels (descending when flipped) on round_part, the opponent is forced
        to answer each with the matching co-label there.  ``collide`` is the
        opponent's opening label; when our designated label hits it we block
        from the other part instead."""
        after = False
        k = 0
        replies = []
        for pl, v, l in st.history:
            if not after:
                if pl is side and (v, l) == (zero_vertex, zero_label):
                    after = True
                continue
            if pl is side:
                k += 1
            else:
                replies.append((v, l))
        expected = [(t if flip else m - t) for t in range(len(replies))]
        conforming = [l for _, l in replies] == expected and all(
            v in round_part for v, _ in replies
        )
        if not conforming:
            first_ok = replies and replies[0][0] in round_part and replies[0][1] == (
                0 if flip else m
            )
            if not first_ok:
                return _punish_unforced_reply(st, zero_vertex, zero_label)
            return OFFSCRIPT
        nxt_label = m - (k + 1) if flip else k + 1
        if collide is not None and nxt_label == collide:
            other = Y if round_part is X else X
            block = 2 * (m - collide) if flip else m - 2 * collide
            return _place_label(st, block, other)
        free_round = [v for v in round_part if st.labeling.labels[v] is None]
        if not free_round:
            return _finish_dead(st)
        return _try_moves(st, [(v, nxt_label) for v in free_round])

    if st.first_player is Player.BOB:
        # anchor the 0 in a part of size >= 3: only there do two free
        # non-neighbors remain, making the co-extreme reply truly forced
        anchor, rounds_on = (X, Y) if p >= 3 else (Y, X)
        if not own:
            return Move(anchor[0], 0)
        return round_engine(anchor[0], 0, rounds_on, flip=False, collide=None)

    # Alice opened
    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)
    A, B = part_of(va)
    a = len(A)
    if a == 2:
        flip = i > m // 2
        ext = m if flip else 0
        if not own:
            return _place_label(st, ext, B)
        if len(own) >= 2:
            return _finish_dead(st)
        other_a = [x for x in A if x != va][0]
        if st.history[-1][1:] != (other_a, m - ext):
            return _punish_if_extreme(st)
        if i in (1, m - 1):
            return _finish_dead(st)
        kill = 2 * i - (m - 1) if flip else 2 * i - 1
        return _place_label(st, kill, B)
    if len(B) == 2:
        # with only two vertices opposite, the 0 there forces nothing (the
        # opponent can grab the last B vertex); the solver adjudicates
        return OFFSCRIPT
    x = (a - 2) // 2 if a % 2 == 0 else (a - 1) // 2
    flip = i >= m - x
    ext = m if flip else 0
    if not own:
        return _place_label(st, ext, B)
    return round_engine(own[0][0], ext, A, flip=flip, collide=i)


def _structural_caterpillar(g: Graph):
    """(spine sequence, leaves per spine vertex) from degrees; None if star/path-like."""
    leaves = [v for v in range(g.n_vertices) if g.degree(v) == 1]
    spine = [v for v in range(g.n_vertices) if g.degree(v) > 1]
    if not spine:
        return None
    # order the spine as a path
    inner = set(spine)
    ends = [v for v in spine if sum(1 for u in g.adjacency[v] if u in inner) <= 1]
    seq = [min(ends)] if ends else [spine[0]]
    while True:
        nxt = [u for u in g.adjacency[seq[-1]] if u in inner and u not in seq]
        if not nxt:
            break
        seq.append(nxt[0])
    if len(seq) != len(spine):
        return None
    leaf_of = {v: [u for u in g.adjacency[v] if g.degree(u) == 1] for v in seq}
    return seq, leaf_of


def _caterpillar_script(ctx, st):
    g, m = st.graph, st.graph.m
    if max(g.degree(v) for v in range(g.n_vertices)) <= 2:
        # the caterpillar is a bare path: reuse the path line
        ends = [v for v in range(g.n_vertices) if g.degree(v) == 1]
        line = [min(ends)]
        while len(line) < g.n_vertices:
            nxt = [u for u in g.adjacency[line[-1]] if u not in line]
            line.append(nxt[0])
        return _path_script(ctx, st, line)
    spine, leaf_of = _structural_caterpillar(g)
    side = Player.BOB
    own = _own(st, side)
    if len(own) >= 2:
        return _finish_dead(st)

    def kill_one_at_nonneighbor(v_q):
        if not _opp(st, side):
            i = None
        else:
            i = _opp(st, side)[0][1]
        if i == 1:
            return _finish_dead(st)
        return _try_moves(st, [(x, 1) for x in _free_non_neighbors(st, v_q)])

    if st.first_player is Player.BOB:
        if not own:
            sp = next(v for v in spine if leaf_of[v])
            return Move(min(leaf_of[sp]), 0)
        u0 = own[0][0]
        sp = g.adjacency[u0][0]
        if st.history[-1][1:] == (sp, m):
            return _try_moves(st, [(x, 1) for x in _free_non_neighbors(st, sp)])
        return _punish_if_extreme(st)

    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)
    deg = g.degree(va)
    if deg == 1:  # Alice opened on a leaf
        v_p = g.adjacency[va][0]
        special = (
            len(spine) == 2
            and len(leaf_of[v_p]) == 1
            and len(leaf_of[[s for s in spine if s != v_p][0]]) >= 2
            and i >= 2
        )
        if special:
            other_spine = [s for s in spine if s != v_p][0]
            if m % 2 == 0:
                if not own:
                    return _try_moves(st, [(v_p, 1)])
                return _finish_dead(st)
            if not own:
                return _try_moves(st, [(v_p, 0)])
            if st.history[-1][1:] == (other_spine, m):
                return _finish_dead(st)
            return _punish_if_extreme(st)
        if not own:
            v_q = next(s for s in spine if s != v_p and leaf_of[s])
            return Move(min(u for u in leaf_of[v_q] if st.labeling.labels[u] is None), 0)
        v_q = g.adjacency[own[0][0]][0]
        if st.history[-1][1:] == (v_q, m):
            return kill_one_at_nonneighbor(v_q)
        return _punish_if_extreme(st)
    if leaf_of.get(va):  # spine vertex with an unlabeled leaf: punished
        if not own:
            u = min(leaf_of[va])
            return _try_moves(st, [(u, 0), (u, m)])
        return _finish_dead(st)
    # spine vertex without leaves
    idx = spine.index(va)
    middle_of_three = (
        len(spine) == 3 and idx == 1 and leaf_of[spine[0]] and leaf_of[spine[2]]
    )
    if middle_of_three:
        s1, s3 = spine[0], spine[2]
        if not own:
            return Move(min(leaf_of[s1]), 0)
        if st.history[-1][1:] == (s1, m):
            if i == 1:
                return _try_moves(st, [(s3, 2)])
            return kill_one_at_nonneighbor(s1)
        return _punish_if_extreme(st)
    if not own:
        v_p = next(
            (s for s in spine if leaf_of[s] and not g.has_edge(s, va) and s != va), None
        )
        if v_p is None:
            return OFFSCRIPT
        return Move(min(leaf_of[v_p]), 0)
    v_p = g.adjacency[own[0][0]][0]
    if st.history[-1][1:] == (v_p, m):
        return kill_one_at_nonneighbor(v_p)
    return _punish_if_extreme(st)


def _star_script(ctx, st):
    if not _own(st, Player.ALICE):
        center = max(range(st.graph.n_vertices), key=st.graph.degree)
        return Move(center, 0)
    # with 0 on the hub every completion is graceful; any legal move does
    return _first_legal(st)


def _wheel_first_script(ctx, st):
    n = st.graph.family.params[0]
    center = n
    if not _own(st, Player.BOB):
        return Move(center, n)
    return _finish_dead(st)


def _wheel_345_script(ctx, st):
    g, m = st.graph, st.graph.m
    n = g.family.params[0]
    center = n
    side = Player.BOB
    own = _own(st, side)
    if st.first_player is Player.BOB:
        return _wheel_first_script(ctx, st)
    if n == 3:
        return _k4_poison_script(ctx, st)
    (va, i) = _opp(st, side)[0]

    def R(k):
        return k % n

    def center_table_kill():
        """Center taken: place a label no consistent graceful labeling uses."""
        if not any(f[center] == i for f in graceful_labelings(g)):
            return _finish_dead(st)
        poison = _poison_given_vertex(g, center, i)
        if not poison:
            return OFFSCRIPT
        return _place_label(st, poison[0], range(n))

    if n == 4:
        if va == center:
            return center_table_kill() if not own else _finish_dead(st)
        if i == 4:
            j = va
            if not own:
                return _try_moves(st, [(center, 0)])
            if len(own) == 1:
                if st.history[-1][1:] == (R(j + 2), 8):
                    return _try_moves(st, [(R(j + 1), 1)])
                return OFFSCRIPT
            return _finish_dead(st)
        if not own:
            return _try_moves(st, [(center, 4)])
        return _finish_dead(st)
    # n == 5
    if va != center:
        j = va
        if i != 5:
            if not own:
                return _try_moves(st, [(center, 5)])
            return _finish_dead(st)
        if not own:
            return _try_moves(st, [(R(j - 1), 0)])
        if len(own) == 1:
            if st.history[-1][1:] == (R(j - 2), 10):
                return _try_moves(st, [(R(j - 3), 9)])
            return OFFSCRIPT
        return _finish_dead(st)
    # Alice took the center
    if i == 5:
        return _finish_dead(st)
    if i in (0, 10):
        return center_table_kill() if not own else _finish_dead(st)
    if i in (1, 9):
        ext_hi = 9 if i == 1 else 1
        fin = 10 if i == 1 else 0
        if not own:
            return _try_moves(st, [(0, ext_hi)])
        if len(own) == 1:
            (_, lv, ll) = st.history[-1]
            if 2 <= ll <= 8:
                nbrs = [u for u in g.adjacency[0] if u != center and st.labeling.labels[u] is None]
                return _try_moves(st, [(u, fin) for u in nbrs])
            return OFFSCRIPT
        return _finish_dead(st)
    # 2 <= i <= 8, i != 5
    if not own:
        return _try_moves(st, [(0, 0)])
    if len(own) == 1:
        last = st.history[-1][1:]
        if last == (1, 10):
            return _try_moves(st, [(4, 1)] if i != 2 else [(3, 1)])
        if last == (4, 10):
            return _try_moves(st, [(1, 1)] if i != 2 else [(2, 1)])
        return OFFSCRIPT
    return _finish_dead(st)


def _gear_script(ctx, st):
    g, m = st.graph, st.graph.m
    n = g.family.params[0]
    center = n
    side = Player.BOB
    own = _own(st, side)

    def V(k):
        return k % n

    def W(k):
        return n + 1 + (k % n)

    if st.first_player is Player.BOB:
        if not own:
            return Move(W(0), 0)
        if len(own) == 1:
            last = st.history[-1][1:]
            if last == (V(0), m):
                return _try_moves(st, [(V(1), 1)])
            if last == (V(1), m):
                return _try_moves(st, [(V(0), 1)])
            return _punish_if_extreme(st)
        return _finish_dead(st)

    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)

    if n == 3:
        if va == center:
            if not own:
                e = _dead_extreme_near(g, center, i)
                if e is None:
                    return OFFSCRIPT
                return _try_moves(st, [(V(0), e), (V(1), e), (V(2), e)])
            return _finish_dead(st)
        if va < n:  # degree-three ring vertex
            j = va
            if not own:
                return _try_moves(st, [(center, 0)])
            if len(own) == 1:
                (_, lv, ll) = st.history[-1]
                if ll == m and lv < n and lv != j:
                    if i in (1, 8):
                        kill = 8 if i == 1 else 1
                        cands = [W(j), W(j - 1)]
                        return _try_moves(st, [(w, kill) for w in cands])
                    third = [v for v in range(n) if v not in (j, lv)][0]
                    return _try_moves(st, [(third, 1)])
                return _punish_if_extreme(st)
            return _finish_dead(st)
        # degree-two subdivision vertex w_j
        j = va - (n + 1)
        if i == 8:
            if not own:
                return _try_moves(st, [(W(j + 2), 0)])
            if len(own) == 1:
                (_, lv, ll) = st.history[-1]
                if ll == m and lv in (V(j + 2), V(j)):
                    cands = [l for l in (5, 6, 7) if not st.labeling.label_used(l)]
                    return _try_moves(st, [(center, l) for l in cands])
                return _punish_if_extreme(st)
            return _finish_dead(st)
        if not own:
            return _try_moves(st, [(V(j + 1), 0)])
        if len(own) == 1:
            last = st.history[-1][1:]
            if last == (center, m):
                kill = 8 if i == 1 else 1
                target = W(j + 2) if i == 1 else W(j + 1)
                return _try_moves(st, [(target, kill)])
            return OFFSCRIPT
        return _finish_dead(st)

    # n >= 4
    if va > n:  # subdivision vertex w_j
        j = va - (n + 1)
        if not own:
            return _try_moves(st, [(W(j + 2), 0)])
        if len(own) == 1:
            (_, lv, ll) = st.history[-1]
            if ll == m and lv in (V(j + 2), V(j + 3)):
                if i == 1:
                    return _try_moves(st, [(V(j), m - 2), (V(j + 1), m - 2)])
                other = V(j + 3) if lv == V(j + 2) else V(j + 2)
                return _try_moves(st, [(other, 1)])
            return _punish_if_extreme(st)
        return _finish_dead(st)
    if va < n:  # ring vertex v_j
        j = va
        ext = m if i == m - 1 else 0
        if not own:
            return _try_moves(st, [(W(j), ext)])
        if len(own) == 1:
            if st.history[-1][1:] == (V(j + 1), m - ext):
                if i == m - 1 or i == 1:
                    return _finish_dead(st)
                return _try_moves(st, [(W(j - 1), 1)])
            return _punish_if_extreme(st)
        return _finish_dead(st)
    # center
    if i != m - 1:
        if not own:
            return _try_moves(st, [(V(0), 0)])
        if len(own) == 1:
            (_, lv, ll) = st.history[-1]
            if ll == m and lv in (W(-1), W(0)):
                if i == 1:
                    cands = [W(p) for p in range(n) if W(p) not in (W(-1), lv)]
                    return _try_moves(st, [(w, m - 1) for w in cands])
                other = W(0) if lv == W(-1) else W(-1)
                return _try_moves(st, [(other, 1)])
            return _punish_if_extreme(st)
        return _finish_dead(st)
    if not own:
        return _try_moves(st, [(V(0), m)])
    if len(own) == 1:
        (_, lv, ll) = st.history[-1]
        if ll == 0 and lv in (W(-1), W(0)):
            other = W(0) if lv == W(-1) else W(-1)
            return _try_moves(st, [(other, 2)])
        return _punish_if_extreme(st)
    return _finish_dead(st)


def _helm_script(ctx, st):
    g, m = st.graph, st.graph.m
    n = g.family.params[0]
    side = Player.BOB
    own = _own(st, side)

    def pend(k):
        return n + k

    def kill_one(v_p, label=1):
        return _try_moves(st, [(x, label) for x in _free_non_neighbors(st, v_p)])

    if st.first_player is Player.BOB:
        if not own:
            return Move(pend(1), 0)
        if len(own) == 1 and st.history[-1][1:] == (1, m):
            return kill_one(1)
        if len(own) == 1:
            return _punish_if_extreme(st)
        return _finish_dead(st)

    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)
    if va == 0:  # center
        ext = m if i == 1 else 0
        if not own:
            return Move(pend(1), ext)
        if len(own) == 1:
            if st.history[-1][1:] == (1, m - ext):
                return kill_one(1, m - 1 if i == 1 else 1)
            return _punish_if_extreme(st)
        return _finish_dead(st)
    if 1 <= va <= n:  # ring vertex: its pendant is still free
        if not own:
            u = pend(va)
            return _try_moves(st, [(u, 0), (u, m)])
        return _finish_dead(st)
    # pendant vertex
    j = va - n
    p = next(k for k in range(1, n + 1) if k != j)
    if not own:
        return Move(pend(p), 0)
    if len(own) == 1:
        if st.history[-1][1:] == (p, m):
            if i == 1:
                return _finish_dead(st)
            return kill_one(p)
        return _punish_if_extreme(st)
    return _finish_dead(st)


def _web_script(ctx, st):
    g, m = st.graph, st.graph.m
    t, n = g.family.params
    side = Player.BOB
    own = _own(st, side)

    def outer(k):
        return n + k

    def chase(p):
        """After our 0 at pendant p: expect m at its ring partner, then cut."""
        if st.history[-1][1:] == (outer(p), m):
            i = _opp(st, side)[0][1] if _opp(st, side) else None
            if i == 1:
                return _finish_dead(st)
            return _try_moves(st, [(x, 1) for x in _free_non_neighbors(st, outer(p))])
        return _punish_if_extreme(st)

    if st.first_player is Player.BOB:
        if not own:
            return Move(1, 0)
        if len(own) == 1:
            return chase(own[0][0])
        return _finish_dead(st)

    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)
    if n + 1 <= va <= 2 * n:  # outer ring vertex with a free pendant
        if not own:
            u = va - n
            return _try_moves(st, [(u, 0), (u, m)])
        return _finish_dead(st)
    if len(own) >= 2:
        return _finish_dead(st)
    if va == 0 or 1 <= va <= n:  # center or a pendant
        p = 1 if va != 1 else 2
        if not own:
            return Move(p, 0)
        return chase(own[0][0])
    # inner ring vertex: avoid the radial line of va
    r = va % n if va % n != 0 else n
    p = next(k for k in range(1, n + 1) if k != r)
    if not own:
        return Move(p, 0)
    return chase(own[0][0])


def _hypercube_script(ctx, st):
    g, m = st.graph, st.graph.m
    nbits = g.family.params[0]
    if nbits == 2:
        return _cycle_script(ctx, st, [0, 1, 3, 2])
    side = Player.BOB
    own = _own(st, side)
    half = nbits // 2

    def side_of(v):
        return bin(v).count("1") % 2

    def rounds(w, collide, block_pool):
        """Our 0 at w, then ascending labels on N(w) against descending replies.

        ``collide`` is Alice's opening label when it sits low enough to shadow
        one of our round labels; reaching it we block with its co-label from
        ``block_pool`` instead of continuing the rounds.
        """
        after = False
        k = 0
        replies = []
        for pl, v, l in st.history:
            if not after:
                if pl is side and (v, l) == (w, 0):
                    after = True
                continue
            if pl is side:
                k += 1
            else:
                replies.append((v, l))
        conforming = [l for _, l in replies] == [m - t for t in range(len(replies))] and all(
            g.has_edge(v, w) for v, _ in replies
        )
        if not conforming:
            first_ok = replies and replies[0][1] == m and g.has_edge(replies[0][0], w)
            if not first_ok:
                return _punish_unforced_reply(st, w, 0)
            return OFFSCRIPT
        nxt = k + 1
        if collide is not None and nxt == collide:
            return _place_label(st, m - collide, block_pool)
        free_nbrs = [u for u in g.adjacency[w] if st.labeling.labels[u] is None]
        if free_nbrs:
            return _try_moves(st, [(u, nxt) for u in sorted(free_nbrs)])
        if nbits % 2 == 1 and replies:
            u1 = replies[0][0]  # the m-vertex
            cands = [
                v
                for v in range(g.n_vertices)
                if st.labeling.labels[v] is None and not g.has_edge(v, u1)
            ]
            return _try_moves(st, [(v, (nbits - 1) // 2 + 1) for v in cands])
        return _finish_dead(st)

    if st.first_player is Player.BOB:
        if not own:
            return Move(0, 0)
        return rounds(0, None, None)

    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)
    va_side = side_of(va)
    opposite = [v for v in range(g.n_vertices) if side_of(v) != va_side]
    if i in (1, m - 1):
        ext = 0 if i == 1 else m
        if not own:
            w = min(v for v in opposite if not g.has_edge(v, va))
            return _try_moves(st, [(w, ext)])
        if len(own) == 1:
            w = own[0][0]
            (_, lv, ll) = st.history[-1]
            if ll == m - ext and g.has_edge(lv, w):
                kill = m - 1 if i == 1 else 1
                cands = [v for v in opposite if st.labeling.labels[v] is None]
                return _try_moves(st, [(v, kill) for v in cands])
            return _punish_if_extreme(st)
        return _finish_dead(st)
    if 2 <= i <= half or (half < i < m - half and nbits % 2 == 1):
        w = min(v for v in opposite if g.has_edge(v, va))
    elif half < i < m - half:  # even dimension: attack from the opening's own side
        w = min(v for v in range(g.n_vertices) if side_of(v) == va_side and v != va)
    elif m - half <= i <= m - 2:
        w = min(v for v in opposite if not g.has_edge(v, va))
    else:
        return OFFSCRIPT
    if not own:
        return _try_moves(st, [(w, 0)])
    collide = i if 2 <= i <= half else None
    return rounds(w, collide, opposite)


def _prism_script(ctx, st):
    g, m = st.graph, st.graph.m
    r = g.family.params[0]
    side = Player.BOB
    own = _own(st, side)

    if r == 3:
        if st.first_player is Player.BOB:
            if not own:
                return Move(0, 0)
            if len(own) == 1:
                (_, lv, ll) = st.history[-1]
                if ll == m and g.has_edge(lv, 0):
                    if lv == 3:  # the other triangle
                        poison = [
                            l
                            for l in range(m + 1)
                            if all(
                                l not in f
                                for f in graceful_labelings(g)
                                if f[0] == 0 and f[3] == m
                            )
                        ]
                        if not poison:
                            return OFFSCRIPT
                        return _place_label(st, poison[0])
                    kill = _never_adjacent(g, m)
                    if not kill:
                        return OFFSCRIPT
                    nbrs = [u for u in g.adjacency[lv] if st.labeling.labels[u] is None]
                    return _try_moves(st, [(u, l) for l in kill for u in nbrs])
                return _punish_if_extreme(st)
            return _finish_dead(st)
        (va, i) = _opp(st, side)[0]
        if i in (0, m):
            return _punish_opening(st) if not own else _finish_dead(st)
        if not own:
            kill = _never_adjacent(g, i)
            if not kill:
                return OFFSCRIPT
            nbrs = [u for u in g.adjacency[va] if st.labeling.labels[u] is None]
            return _try_moves(st, [(u, l) for l in kill for u in nbrs])
        return _finish_dead(st)

    # r >= 4
    if st.first_player is Player.BOB:
        if not own:
            return Move(0, 0)
        if len(own) == 1:
            w = _forced_coextreme(st, 0, 0)
            if w is None:
                return _punish_if_extreme(st)
            cands = [u for u in g.adjacency[w] if st.labeling.labels[u] is None]
            return _try_moves(st, [(u, m - 1) for u in cands])
        if len(own) == 2:
            u = own[1][0]  # carries m-1
            holders = [x for x in g.adjacency[u] if st.labeling.labels[x] == m]
            if not holders:
                return _finish_dead(st)
            w = holders[0]
            (_, lv, ll) = st.history[-1]
            if ll == 1 and lv in g.adjacency[w]:
                cands = [
                    x
                    for x in range(g.n_vertices)
                    if st.labeling.labels[x] is None
                    and not g.has_edge(x, 0)
                    and not g.has_edge(x, u)
                ]
                return _try_moves(st, [(x, m - 2) for x in cands])
            return OFFSCRIPT
        return _finish_dead(st)

    (va, i) = _opp(st, side)[0]
    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)
    if not own:
        w = min(g.adjacency[va])
        ext = m if i == m - 1 else 0
        return _try_moves(st, [(w, ext)])
    if len(own) == 1:
        w, ext = own[0]
        u = _forced_coextreme(st, w, ext)
        if u is None:
            return _punish_if_extreme(st)
        if i in (1, m - 1):
            kill = m - 1 if i == 1 else 1
            cands = [
                y
                for y in g.adjacency[va]
                if st.labeling.labels[y] is None and not g.has_edge(y, u)
            ]
            return _try_moves(st, [(y, kill) for y in cands])
        rem = [x for x in g.adjacency[w] if st.labeling.labels[x] is None]
        return _try_moves(st, [(x, 1) for x in rem])
    return _finish_dead(st)


def _pathpower2_script(ctx, st):
    g, m = st.graph, st.graph.m
    n = g.n_vertices
    side = Player.BOB
    own = _own(st, side)
    mid = (m + 1) // 2

    if st.first_player is Player.BOB:
        if not own:
            return Move(0, 0)
        if len(own) == 1:
            last = st.history[-1][1:]
            if last == (1, m):
                return _try_moves(st, [(3, m - 1)])
            if last == (2, m):
                return _try_moves(st, [(3, mid)])
            return _punish_if_extreme(st)
        if len(own) == 2 and own[1] == (3, mid):
            if st.history[-1][1:] == (1, m - 1):
                if n >= 5:
                    labels = [
                        l for l in range(m + 1) if l != 2 and not st.labeling.label_used(l)
                    ]
                    return _try_moves(st, [(4, l) for l in labels])
                return _finish_dead(st)
            return OFFSCRIPT
        return _finish_dead(st)

    # Alice opened
    (va_raw, i) = _opp(st, side)[0]
    flip = va_raw < n - 1 - va_raw

    def F(v):
        # the square of a path is symmetric under reversal; normalize so the
        # opening sits in the upper half and address vertices through F
        return n - 1 - v if flip else v

    j = F(va_raw)

    def hist_last():
        (_, lv, ll) = st.history[-1]
        return (F(lv), ll)

    if i in (0, m):
        return _punish_opening(st) if not own else _finish_dead(st)

    if len(own) >= 2:
        return _finish_dead(st)

    if n == 4:
        if not own:
            if j == 2:
                if i == 1:
                    return OFFSCRIPT  # the scripted block is unavailable here
                return _try_moves(st, [(F(1), 1)])
            return _place_label(st, 5 - i)
        return _finish_dead(st)

    if n == 5:
        if not own:
            if j == 2:
                if i == 1:
                    return _place_label(st, 2)
                if i == 6:
                    return _place_label(st, 5)
                return _try_moves(st, [(F(0), 7)])
            return _try_moves(st, [(F(0), 0 if i == 6 else 7)])
        last = hist_last()
        if j == 2:
            if i in (1, 6):
                return _finish_dead(st)
            if last == (1, 0):
                return _finish_dead(st)  # dead for i=3; otherwise flagged live
            return OFFSCRIPT
        if j == 3 and i != 6:
            if last == (1, 0):
                return _first_deadening(st, [(F(2), k) for k in range(2, 6)])
            if last == (2, 0):
                # the off-by-one block must not itself hand over edge m-1
                cands = [(F(4), x) for x in (i + 1, i - 1) if x != m - 1]
                return _try_moves(st, cands)
            return _punish_if_extreme(st)
        if j == 3:  # i == 6
            if last == (1, 7):
                return _try_moves(st, [(F(4), 1)])
            if last == (2, 7):
                return _try_moves(st, [(F(1), 2)])
            return _punish_if_extreme(st)
        if j == 4 and i == 6:
            if last == (1, 7):
                return _try_moves(st, [(F(3), 5)])
            if last == (2, 7):
                return _try_moves(st, [(F(1), 5)])
            return _punish_if_extreme(st)
        if j == 4 and i == 3:
            if last == (1, 0):
                return _try_moves(st, [(F(2), 4)])
            if last == (2, 0):
                return _try_moves(st, [(F(3), 4)])
            return _punish_if_extreme(st)
        # j == 4, i not in {3, 6}
        if last == (1, 0):
            return _try_moves(st, [(F(2), 3)])
        if last == (2, 0):
            if i == 4:
                return _try_moves(st, [(F(1), 2)])
            return _try_moves(st, [(F(1), 3)])
        return _punish_if_extreme(st)

    def general_tail():
        """Far-end attack used for openings away from the middle."""
        hi = i in (1, mid)
        if not own:
            return _try_moves(st, [(F(0), m if hi else 0)])
        last = hist_last()
        co = 0 if hi else m
        block = (m - 1) // 2 if hi else mid
        if last == (1, co):
            return _try_moves(st, [(F(2), block)])
        if last == (2, co):
            return _try_moves(st, [(F(3), block)])
        return _punish_if_extreme(st)

    half = n // 2
    mid_j = 3 if n in (6, 7) else half
    second_j = 4 if n in (6, 7) else None
    if j == mid_j:
        if i in (1, m - 1):
            ext = m if i == 1 else 0
            if not own:
                return _try_moves(st, [(F(0), ext)])
            last = hist_last()
            if last[0] in (1, 2) and last[1] == m - ext:
                kill = m - 1 if i == 1 else 1
                forced_v = F(last[0])
                cands = [
                    x
                    for x in range(n)
                    if st.labeling.labels[x] is None and not g.has_edge(x, forced_v)
                ]
                return _try_moves(st, [(x, kill) for x in cands])
            return _punish_if_extreme(st)
        if not own:
            return _try_moves(st, [(F(0), 0)])
        last = hist_last()
        if last[0] in (1, 2) and last[1] == m:
            other = 2 if last[0] == 1 else 1
            return _first_deadening(st, [(F(other), k) for k in range(2, m - 1)])
        return _punish_if_extreme(st)
    if second_j is not None and j == second_j:
        if i in (1, m - 1):
            if not own:
                return _try_moves(st, [(F(0), m if i == 1 else 0)])
            last = hist_last()
            if last[0] in (1, 2) and last[1] == (0 if i == 1 else m):
                block = (m - 1) // 2 if i == 1 else mid
                return _try_moves(st, [(F(3), block)])
            return _punish_if_extreme(st)
        if n == 6:
            # the far-end block loses to a 1-beside-the-9 reply here (the
            # last vertex falls to Bob in zugzwang); adjudicated instead
            return OFFSCRIPT
        if not own:
            return _try_moves(st, [(F(0), 0)])
        last = hist_last()
        if last[0] in (1, 2) and last[1] == m:
            return _try_moves(st, [(F(n - 1), i - 1)])
        return _punish_if_extreme(st)
    return general_tail()


# ---------------------------------------------------------------------------
# registry, dispatch, verification


@dataclass(frozen=True)
class Strategy:
    id: StrategyId
    side: Player
    first: Player | None  # None: works whichever side opens
    families: tuple[str, ...]

    def applicable_to(self, g: Graph) -> bool:
        if g.family is None or g.family.family not in self.families:
            return False
        p = g.family.params
        fam = g.family.family
        sid = self.id
        if sid == StrategyId.ALICE_P1P2:
            return p[0] <= 2
        if sid in (StrategyId.ALICE_P3_FIRST, StrategyId.BOB_P3_FIRST):
            return p[0] == 3
        if sid == StrategyId.BOB_PATH:
            return p[0] >= 4
        if sid == StrategyId.ALICE_K3:
            return p[0] == 3
        if sid == StrategyId.ALICE_STAR_FIRST:
            if fam == "star":
                return p[0] >= 2
            return (p[0] == 1 and p[1] >= 2) or (p[1] == 1 and p[0] >= 2)
        if sid == StrategyId.BOB_K4:
            return p[0] == 4
        if sid == StrategyId.BOB_CYCLE:
            return p[0] >= 4
        if sid == StrategyId.BOB_BIPARTITE:
            return min(p) >= 2
        if sid == StrategyId.BOB_CATERPILLAR:
            from .graphs import diameter

            return diameter(build_family(g.family)) >= 3
        if sid == StrategyId.BOB_WHEEL_FIRST:
            return p[0] >= 3
        if sid == StrategyId.BOB_WHEEL_W3W4W5:
            return p[0] in (3, 4, 5)
        if sid == StrategyId.BOB_GEAR or sid == StrategyId.BOB_HELM:
            return p[0] >= 3
        if sid == StrategyId.BOB_WEB:
            return True
        if sid == StrategyId.BOB_HYPERCUBE:
            return p[0] >= 2
        if sid == StrategyId.BOB_PRISM:
            return p[0] >= 3
        if sid == StrategyId.BOB_PATHPOWER2:
            return p[1] == 2 and p[0] >= 4
        return False


STRATEGIES: dict[StrategyId, Strategy] = {
    s.id: s
    for s in (
        Strategy(StrategyId.ALICE_P1P2, Player.ALICE, None, ("path",)),
        Strategy(StrategyId.ALICE_P3_FIRST, Player.ALICE, Player.ALICE, ("path",)),
        Strategy(StrategyId.ALICE_K3, Player.ALICE, None, ("complete", "cycle")),
        Strategy(
            StrategyId.ALICE_STAR_FIRST, Player.ALICE, Player.ALICE, ("star", "complete_bipartite")
        ),
        Strategy(StrategyId.BOB_PATH, Player.BOB, None, ("path",)),
        Strategy(StrategyId.BOB_P3_FIRST, Player.BOB, Player.BOB, ("path",)),
        Strategy(StrategyId.BOB_K4, Player.BOB, None, ("complete",)),
        Strategy(StrategyId.BOB_CYCLE, Player.BOB, None, ("cycle",)),
        Strategy(StrategyId.BOB_BIPARTITE, Player.BOB, None, ("complete_bipartite",)),
        Strategy(StrategyId.BOB_CATERPILLAR, Player.BOB, None, ("caterpillar",)),
        Strategy(StrategyId.BOB_WHEEL_FIRST, Player.BOB, Player.BOB, ("wheel",)),
        Strategy(StrategyId.BOB_WHEEL_W3W4W5, Player.BOB, None, ("wheel",)),
        Strategy(StrategyId.BOB_GEAR, Player.BOB, None, ("gear",)),
        Strategy(StrategyId.BOB_HELM, Player.BOB, None, ("helm",)),
        Strategy(StrategyId.BOB_WEB, Player.BOB, None, ("web",)),
        Strategy(StrategyId.BOB_HYPERCUBE, Player.BOB, None, ("hypercube",)),
        Strategy(StrategyId.BOB_PRISM, Player.BOB, None, ("prism",)),
        Strategy(StrategyId.BOB_PATHPOWER2, Player.BOB, None, ("path_power",)),
    )
}

_SCRIPTS = {
    StrategyId.ALICE_P1P2: _script_p1p2,
    StrategyId.ALICE_P3_FIRST: _script_alice_p3,
    StrategyId.ALICE_K3: _triangle_script,
    StrategyId.ALICE_STAR_FIRST: _star_script,
    StrategyId.BOB_PATH: lambda ctx, st: _path_script(ctx, st, list(range(st.graph.n_vertices))),
    StrategyId.BOB_P3_FIRST: _script_bob_p3,
    StrategyId.BOB_K4: _k4_poison_script,
    StrategyId.BOB_CYCLE: lambda ctx, st: _cycle_script(ctx, st, list(range(st.graph.n_vertices))),
    StrategyId.BOB_BIPARTITE: _bipartite_script,
    StrategyId.BOB_CATERPILLAR: _caterpillar_script,
    StrategyId.BOB_WHEEL_FIRST: _wheel_first_script,
    StrategyId.BOB_WHEEL_W3W4W5: _wheel_345_script,
    StrategyId.BOB_GEAR: _gear_script,
    StrategyId.BOB_HELM: _helm_script,
    StrategyId.BOB_WEB: _web_script,
    StrategyId.BOB_HYPERCUBE: _hypercube_script,
    StrategyId.BOB_PRISM: _prism_script,
    StrategyId.BOB_PATHPOWER2: _pathpower2_script,
}


def _check_applicable(sid: StrategyId, st: GameState) -> Strategy:
    strat = STRATEGIES[sid]
    if not strat.applicable_to(st.graph):
        raise NotApplicableError(f"{sid.value} does not cover this graph")
    if strat.first is not None and st.first_player is not strat.first:
        raise NotApplicableError(
            f"{sid.value} requires {strat.first.value} to move first"
        )
    if st.to_move is not strat.side:
        raise NotApplicableError(f"it is not {strat.side.value}'s turn")
    return strat


def scripted_move(sid: StrategyId, st: GameState) -> Move:
    """The move the script dictates for the current state.

    Raises NotApplicableError for a wrong family/side/turn and OffScriptError
    when the state falls outside the script's case analysis.
    """
    _check_applicable(sid, st)
    mv = _SCRIPTS[sid](None, st)
    if mv is OFFSCRIPT or mv is None:
        raise OffScriptError(f"{sid.value}: state not covered by the script")
    if not is_legal_move(st.labeling, mv[0], mv[1]):
        raise OffScriptError(f"{sid.value}: script produced illegal move {mv}")
    return Move(*mv)


@dataclass(frozen=True)
class StrategyVerdict:
    strategy: StrategyId
    instance: FamilySpec
    first: Player
    holds: bool
    lines_checked: int
    offscript_count: int
    counterexample: tuple[tuple[str, int, int], ...] | None

    def to_json(self) -> dict:
        return {
            "v": 1,
            "strategy": self.strategy.value,
            "instance": self.instance.encode(),
            "first": self.first.value,
            "holds": self.holds,
            "lines_checked": self.lines_checked,
            "offscript_count": self.offscript_count,
            "counterexample": (
                [list(mv) for mv in self.counterexample] if self.counterexample else None
            ),
        }


class _Verifier:
    def __init__(self, sid: StrategyId, graph: Graph, side: Player, budget: Budget):
        self.sid = sid
        self.graph = graph
        self.side = side
        self.budget = budget
        self.lines = 0
        self.offscript = 0

    def _losing_line(self, st: GameState):
        """Extend a lost position to a full game record (scripted side loses)."""
        cur = st
        while status(cur) is Status.IN_PROGRESS:
            cur = play_move(cur, solver_mod.best_move(cur))
        return cur.history

    def explore(self, st: GameState):
        self.budget.tick()
        stat = status(st)
        if stat is not Status.IN_PROGRESS:
            self.lines += 1
            winner = Player.ALICE if stat is Status.ALICE_WON else Player.BOB
            return None if winner is self.side else st.history
        if not solver_mod.completable(st):
            # no graceful completion exists: every line from here is a Bob win
            self.lines += 1
            if self.side is Player.BOB:
                return None
            cur = st
            while status(cur) is Status.IN_PROGRESS:
                cur = play_move(cur, min(legal_moves(cur)))
            return cur.history
        if st.to_move is self.side:
            mv = _SCRIPTS[self.sid](None, st)
            if mv is OFFSCRIPT or mv is None or not is_legal_move(st.labeling, mv[0], mv[1]):
                self.offscript += 1
                self.lines += 1
                if solver_mod.game_value(st) is self.side:
                    return None  # solver fallback wins every continuation
                return self._losing_line(st)
            return self.explore(play_move(st, Move(*mv)))
        for mv in legal_moves(st):
            ce = self.explore(play_move(st, mv))
            if ce is not None:
                return ce
        return None


def verify_strategy(
    sid: StrategyId,
    spec: FamilySpec,
    first: Player,
    budget: Budget | None = None,
) -> StrategyVerdict:
    """Play the script against every legal opponent reply, depth-first.

    ``holds`` is True iff every line ends with the scripted side winning.
    Subtrees with no graceful completion close immediately (they are wins
    for Bob no matter what follows); off-script states are adjudicated by
    the perfect-play solver and counted.
    """
    graph = build_family(spec)
    strat = STRATEGIES[sid]
    start = new_game(graph, first)
    _check_applicable_for_verify(sid, start)
    v = _Verifier(sid, graph, strat.side, budget or Budget())
    ce = v.explore(start)
    counterexample = (
        tuple((p.value, vv, ll) for p, vv, ll in ce) if ce is not None else None
    )
    return StrategyVerdict(
        sid, spec, first, ce is None, v.lines, v.offscript, counterexample
    )


def _check_applicable_for_verify(sid: StrategyId, start: GameState) -> None:
    strat = STRATEGIES[sid]
    if not strat.applicable_to(start.graph):
        raise NotApplicableError(f"{sid.value} does not cover {start.graph.family}")
    if strat.first is not None and start.first_player is not strat.first:
        raise NotApplicableError(f"{sid.value} requires {strat.first.value} first")


def replay_counterexample(verdict: StrategyVerdict) -> GameState:
    """Re-run a counterexample; the final status shows the scripted side losing."""
    graph = build_family(verdict.instance)
    st = new_game(graph, verdict.first)
    for _, v, l in verdict.counterexample:
        st = play_move(st, Move(v, l))
    return st


# ---------------------------------------------------------------------------
# opening moves the forcing rules prove losing


def forbidden_first_labels(g: Graph) -> frozenset[tuple[int, int]]:
    """Opening moves (vertex, label) that are provably losing for Alice.

    The extreme-label rule applies to every graph: 0 or m on a vertex with a
    non-neighbor loses to the co-extreme played far away.  Family-specific
    additions: the wheel hub may never take n; a caterpillar spine vertex
    with an unlabeled leaf, a helm ring vertex, and a web outer-ring vertex
    admit no opening label at all.
    """
    m = g.m
    if m == 0:
        return frozenset()
    out: set[tuple[int, int]] = set()
    for v in range(g.n_vertices):
        if g.degree(v) < g.n_vertices - 1:
            out.add((v, 0))
            out.add((v, m))
    fam = g.family.family if g.family else None
    if fam == "wheel":
        n = g.family.params[0]
        out.add((n, n))
    elif fam == "caterpillar":
        roles = _structural_caterpillar(g)
        if roles:
            spine, leaf_of = roles
            for v in spine:
                if leaf_of[v]:
                    out.update((v, l) for l in range(m + 1))
    elif fam == "helm":
        n = g.family.params[0]
        for v in range(1, n + 1):
            out.update((v, l) for l in range(m + 1))
    elif fam == "web":
        t, n = g.family.params
        for v in range(n + 1, 2 * n + 1):
            out.update((v, l) for l in range(m + 1))
    return frozenset(out)
