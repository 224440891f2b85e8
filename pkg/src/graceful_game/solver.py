"""Perfect-play solver for the graceful game.

Search is negamax over the two-valued outcome (Alice completes a graceful
labeling, or Bob prevents it) with a transposition table.  Memo keys are
canonical: the partial vertex->label map is minimized over the graph's
automorphism group and over the label complement l -> m-l, both of which
provably preserve the game value.

Two sound prunes keep dead regions cheap:

* ``_quick_dead``: some unused edge label can no longer be formed by any
  placement (each edge label d only arises from label pairs (a, a+d));
* ``completable``: the partial labeling has no graceful completion at all,
  established by a memoized most-constrained-vertex backtracking search.
  No completion means no line of play ends with an Alice win.

Budgets count node expansions (see budget.py), never wall-clock time.
"""

from __future__ import annotations

import hashlib
import json
import threading
from dataclasses import dataclass

from .budget import Budget
from .engine import GameState, Move, Player, Status, new_game, play_move, status
from .errors import GameOverError, SizeMismatchError
from .graphs import FamilySpec, Graph, automorphisms, build_family, graph_to_json
from .labeling import PartialLabeling

FREE = -1


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a perfect-play solve from one queried state."""

    winner: Player
    optimal_moves: tuple[Move, ...]
    nodes_expanded: int
    principal_variation: tuple[Move, ...]


class GraphSolver:
    """Search engine bound to one graph; the memo table persists across calls."""

    def __init__(self, graph: Graph, use_symmetry: bool = True, use_memo: bool = True,
                 budget: Budget | None = None):
        self.graph = graph
        self.n = graph.n_vertices
        self.m = graph.m
        self.adj = graph.adjacency
        self.use_symmetry = use_symmetry
        self.use_memo = use_memo
        self.budget = budget or Budget()
        self.memo: dict = {}
        self.comp_memo: dict = {}
        self.lock = threading.RLock()

        degs = [graph.degree(v) for v in range(self.n)]
        self.vertex_order = sorted(range(self.n), key=lambda v: (-degs[v], v))
        lo, hi = 0, self.m
        order = []
        while lo <= hi:  # extremes first: 0, m, 1, m-1, ...
            order.append(lo)
            if hi != lo:
                order.append(hi)
            lo, hi = lo + 1, hi - 1
        self.label_order = tuple(order)
        if use_symmetry and self.n <= 16:
            self.perms = automorphisms(graph)
        else:
            self.perms = (tuple(range(self.n)),)

        self.labels = [FREE] * self.n
        self.pos = [FREE] * (self.m + 1)
        self.free_nbr = list(degs)
        self.ff_edges = self.m
        self.used_mask = 0
        self.edge_mask = 0
        self.n_free = self.n

    # -- mutable position ---------------------------------------------------

    def _load(self, labels) -> None:
        if len(labels) != self.n:
            raise SizeMismatchError("labeling length != n_vertices")
        self.labels = [FREE if l is None else int(l) for l in labels]
        self.pos = [FREE] * (self.m + 1)
        self.used_mask = 0
        self.edge_mask = 0
        self.n_free = 0
        self.ff_edges = 0
        for v, l in enumerate(self.labels):
            if l >= 0:
                self.pos[l] = v
                self.used_mask |= 1 << l
            else:
                self.n_free += 1
        for u, v in self.graph.edges:
            lu, lv = self.labels[u], self.labels[v]
            if lu >= 0 and lv >= 0:
                self.edge_mask |= 1 << abs(lu - lv)
            elif lu < 0 and lv < 0:
                self.ff_edges += 1
        self.free_nbr = [
            sum(1 for u in self.adj[v] if self.labels[u] < 0) for v in range(self.n)
        ]

    def _move_diffs(self, v: int, l: int) -> int | None:
        """Edge labels the move would create, or None if the move is illegal."""
        if self.used_mask >> l & 1 or self.labels[v] >= 0:
            return None
        mask = 0
        em = self.edge_mask
        for u in self.adj[v]:
            lu = self.labels[u]
            if lu >= 0:
                bit = 1 << (lu - l if lu > l else l - lu)
                if (em | mask) & bit:
                    return None
                mask |= bit
        return mask

    def _do(self, v: int, l: int, diffs: int) -> None:
        for u in self.adj[v]:
            if self.labels[u] < 0:
                self.ff_edges -= 1
            self.free_nbr[u] -= 1
        self.labels[v] = l
        self.pos[l] = v
        self.used_mask |= 1 << l
        self.edge_mask |= diffs
        self.n_free -= 1

    def _undo(self, v: int, l: int, diffs: int) -> None:
        self.labels[v] = FREE
        for u in self.adj[v]:
            if self.labels[u] < 0:
                self.ff_edges += 1
            self.free_nbr[u] += 1
        self.pos[l] = FREE
        self.used_mask &= ~(1 << l)
        self.edge_mask &= ~diffs
        self.n_free += 1

    # -- prunes and keys ----------------------------------------------------

    def _quick_dead(self) -> bool:
        """True when some unused edge label is provably unreachable."""
        pos = self.pos
        free_nbr = self.free_nbr
        have_ff = self.ff_edges > 0
        em = self.edge_mask
        for d in range(self.m, 0, -1):
            if em >> d & 1:
                continue
            for a in range(0, self.m - d + 1):
                pa = pos[a]
                pb = pos[a + d]
                if pa >= 0:
                    if pb >= 0:
                        continue  # both placed and (since d unformed) non-adjacent
                    if free_nbr[pa] > 0:
                        break
                elif pb >= 0:
                    if free_nbr[pb] > 0:
                        break
                elif have_ff:
                    break
            else:
                return True
        return False

    def _key(self):
        enc = tuple(self.labels)
        if not self.use_symmetry:
            return enc
        m = self.m
        comp = tuple((m - x) if x >= 0 else FREE for x in enc)
        best = enc if enc <= comp else comp
        n = self.n
        for p in self.perms:
            for base in (enc, comp):
                cand = tuple(base[p[i]] for i in range(n))
                if cand < best:
                    best = cand
        return best

    def completable(self) -> bool:
        """Does the current partial labeling extend to any graceful labeling?"""
        self.budget.tick()
        if self.n_free == 0:
            return True
        if self._quick_dead():
            return False
        key = self._key() if self.use_memo else None
        if key is not None:
            hit = self.comp_memo.get(key)
            if hit is not None:
                return hit
        best_v, best_opts = -1, None
        for v in range(self.n):
            if self.labels[v] >= 0:
                continue
            opts = []
            for l in range(self.m + 1):
                diffs = self._move_diffs(v, l)
                if diffs is not None:
                    opts.append((l, diffs))
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    break
        val = False
        for l, diffs in best_opts:
            self._do(best_v, l, diffs)
            ok = self.completable()
            self._undo(best_v, l, diffs)
            if ok:
                val = True
                break
        if key is not None:
            self.comp_memo[key] = val
        return val

    # -- game value ----------------------------------------------------------

    def value(self, to_move: Player) -> bool:
        """True iff Alice wins under perfect play from the current position."""
        self.budget.tick()
        if self.n_free == 0:
            return True
        if not self.completable():
            return False
        key = None
        if self.use_memo:
            key = (self._key(), to_move is Player.ALICE)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
        nxt = to_move.other
        alice_moving = to_move is Player.ALICE
        val = not alice_moving  # Alice: no winning child found yet; Bob: all good so far
        moved = False
        for v in self.vertex_order:
            if self.labels[v] >= 0:
                continue
            for l in self.label_order:
                diffs = self._move_diffs(v, l)
                if diffs is None:
                    continue
                moved = True
                self._do(v, l, diffs)
                child = self.value(nxt)
                self._undo(v, l, diffs)
                if child is alice_moving:
                    val = alice_moving
                    break
            else:
                continue
            break
        if not moved:
            val = False  # mover is stuck: graceful completion unreachable, Bob wins
        if key is not None:
            self.memo[key] = val
        return val

    def value_of_state(self, state: GameState) -> Player:
        with self.lock:
            self._load(state.labeling.labels)
            return Player.ALICE if self.value(state.to_move) else Player.BOB

    # -- public queries -------------------------------------------------------

    def _root_moves(self, state: GameState) -> list[tuple[Move, Player]]:
        """Every legal move and the game value of the state it leads to."""
        out = []
        nxt = state.to_move.other
        self._load(state.labeling.labels)
        for v in range(self.n):
            if self.labels[v] >= 0:
                continue
            for l in range(self.m + 1):
                diffs = self._move_diffs(v, l)
                if diffs is None:
                    continue
                self._do(v, l, diffs)
                child = True if self.n_free == 0 else self.value(nxt)
                self._undo(v, l, diffs)
                out.append((Move(v, l), Player.ALICE if child else Player.BOB))
        return out

    def solve_state(self, state: GameState) -> SolveResult:
        with self.lock:
            start = self.budget.used
            winner = self.value_of_state(state)
            mover = state.to_move
            moves = self._root_moves(state)
            if winner is mover:
                optimal = tuple(mv for mv, val in moves if val is mover)
            else:
                optimal = tuple(mv for mv, val in moves)  # every move concedes the same value
            pv = self._principal_variation(state)
            return SolveResult(winner, optimal, self.budget.used - start, pv)

    def best_move_of(self, state: GameState) -> Move:
        """Deterministic optimal move: lowest (vertex, label) among the optimal set."""
        if status(state) is not Status.IN_PROGRESS:
            raise GameOverError("no move to pick in a finished game")
        with self.lock:
            mover = state.to_move
            moves = self._root_moves(state)
            winning = [mv for mv, val in moves if val is mover]
            pool = winning if winning else [mv for mv, _ in moves]
            return min(pool)

    def _principal_variation(self, state: GameState) -> tuple[Move, ...]:
        pv = []
        cur = state
        while status(cur) is Status.IN_PROGRESS:
            mv = self.best_move_of(cur)
            pv.append(mv)
            cur = play_move(cur, mv)
        return tuple(pv)

    def state_key(self, state: GameState):
        """Canonical encoding of (partial map, side to move) after symmetry reduction."""
        with self.lock:
            self._load(state.labeling.labels)
            return (self._key(), state.to_move is Player.ALICE)

    # -- memo persistence ------------------------------------------------------

    def graph_hash(self) -> str:
        payload = json.dumps(
            {"n": self.n, "edges": [list(e) for e in self.graph.edges]}, sort_keys=True
        )
        return hashlib.sha256(payload.encode()).hexdigest()

    def save_memo(self, path) -> int:
        with self.lock, open(path, "w") as fh:
            entries = [[list(enc), alice, val] for (enc, alice), val in self.memo.items()]
            json.dump({"v": 1, "graph": self.graph_hash(), "entries": entries}, fh)
            return len(entries)

    def load_memo(self, path) -> int:
        with self.lock, open(path) as fh:
            data = json.load(fh)
        if data.get("graph") != self.graph_hash():
            raise ValueError("memo dump was built for a different graph")
        for enc, alice, val in data["entries"]:
            self.memo[(tuple(enc), bool(alice))] = bool(val)
        return len(data["entries"])


# ---------------------------------------------------------------------------
# module-level cache so strategy verification shares one memo per graph


_SOLVERS: dict[tuple, GraphSolver] = {}
_SOLVERS_LOCK = threading.Lock()


def solver_for(graph: Graph, use_symmetry: bool = True, use_memo: bool = True) -> GraphSolver:
    key = (graph, use_symmetry, use_memo)
    with _SOLVERS_LOCK:
        s = _SOLVERS.get(key)
        if s is None:
            s = _SOLVERS[key] = GraphSolver(graph, use_symmetry, use_memo)
        return s


def clear_solver_cache() -> None:
    with _SOLVERS_LOCK:
        _SOLVERS.clear()


def _with_budget(s: GraphSolver, budget: Budget | None) -> GraphSolver:
    # a custom budget applies to this call only; otherwise keep counting on a
    # cap that past calls cannot have exhausted
    if budget is not None:
        s.budget = budget
    elif s.budget.remaining() == 0:
        s.budget = Budget()
    return s


def solve(graph: Graph, first: Player, budget: Budget | None = None,
          use_symmetry: bool = True, use_memo: bool = True) -> SolveResult:
    """Winner under perfect play plus optimal moves from the empty position."""
    s = _with_budget(solver_for(graph, use_symmetry, use_memo), budget)
    return s.solve_state(new_game(graph, first))


def solve_state(state: GameState, budget: Budget | None = None,
                use_symmetry: bool = True, use_memo: bool = True) -> SolveResult:
    s = _with_budget(solver_for(state.graph, use_symmetry, use_memo), budget)
    return s.solve_state(state)


def game_value(state: GameState, use_symmetry: bool = True, use_memo: bool = True) -> Player:
    """Winner under perfect play from ``state`` (cheaper than a full solve)."""
    return solver_for(state.graph, use_symmetry, use_memo).value_of_state(state)


def best_move(state: GameState) -> Move:
    return solver_for(state.graph).best_move_of(state)


def completable(state: GameState) -> bool:
    """True when the current partial labeling still has a graceful completion."""
    s = solver_for(state.graph)
    with s.lock:
        s._load(state.labeling.labels)
        return s.completable()


def state_key(state: GameState):
    return solver_for(state.graph).state_key(state)


# ---------------------------------------------------------------------------
# Table reproduction


@dataclass(frozen=True)
class TableRow:
    spec: FamilySpec
    label: str
    alice_first: Player | None
    bob_first: Player | None
    nodes_expanded: int
    error: str | None = None


def solve_table(specs, budget_per_instance: int | None = None) -> list[TableRow]:
    """Per-instance winners (Alice first, Bob first), one row per spec.

    Budget errors are reported in the row and the run continues.
    """
    rows = []
    for spec in specs:
        graph = build_family(spec)
        nodes = 0
        winners: dict[Player, Player | None] = {Player.ALICE: None, Player.BOB: None}
        err = None
        for first in (Player.ALICE, Player.BOB):
            try:
                budget = Budget(budget_per_instance) if budget_per_instance else None
                res = solve(graph, first, budget=budget)
                winners[first] = res.winner
                nodes += res.nodes_expanded
            except Exception as exc:  # budget or parameter errors: report, keep going
                err = f"{type(exc).__name__}: {exc}"
        rows.append(
            TableRow(spec, spec.label, winners[Player.ALICE], winners[Player.BOB], nodes, err)
        )
    return rows


ACCEPTANCE_SPECS: tuple[FamilySpec, ...] = (
    FamilySpec("path", (1,)),
    FamilySpec("path", (2,)),
    FamilySpec("path", (3,)),
    FamilySpec("path", (4,)),
    FamilySpec("path", (5,)),
    FamilySpec("path", (6,)),
    FamilySpec("complete", (3,)),
    FamilySpec("complete", (4,)),
    FamilySpec("cycle", (4,)),
    FamilySpec("cycle", (6,)),
    FamilySpec("cycle", (7,)),
    FamilySpec("star", (2,)),
    FamilySpec("star", (3,)),
    FamilySpec("star", (4,)),
    FamilySpec("complete_bipartite", (2, 2)),
    FamilySpec("complete_bipartite", (2, 3)),
    FamilySpec("caterpillar", (1, 2)),
    FamilySpec("caterpillar", (2, 2)),
    FamilySpec("wheel", (3,)),
    FamilySpec("wheel", (4,)),
    FamilySpec("wheel", (5,)),
    FamilySpec("helm", (3,)),
    FamilySpec("gear", (3,)),
    FamilySpec("hypercube", (2,)),
    FamilySpec("path_power", (4, 2)),
    FamilySpec("path_power", (5, 2)),
    FamilySpec("prism", (3,)),
)
