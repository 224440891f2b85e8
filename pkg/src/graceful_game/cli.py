"""Command line front end: solve, enumerate, verify, table, play, serve, export-dot.

Exit codes: 0 success, 1 a verification failed (counterexample found),
2 node budget exhausted, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .budget import Budget
from .engine import Move, Player, Status, legal_moves, new_game, play_move, status
from .errors import (
    BudgetExceededError,
    GracefulGameError,
    IllegalMoveError,
    InvalidParamsError,
    NotApplicableError,
    OffScriptError,
)
from .graphs import FamilySpec, build_family, to_dot
from .labeling import RAW, UP_TO_AUTOMORPHISM, enumerate_graceful
from .service import FAMILY_PARAMS, spec_from_request
from .solver import ACCEPTANCE_SPECS, best_move, solve, solve_table
from .strategies import StrategyId, scripted_move, verify_strategy

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BUDGET = 2
EXIT_BAD_INPUT = 3

# default family per strategy so `verify --strategy bob-helm --n 3` suffices
STRATEGY_FAMILY = {
    StrategyId.ALICE_P1P2: "path",
    StrategyId.ALICE_P3_FIRST: "path",
    StrategyId.BOB_P3_FIRST: "path",
    StrategyId.BOB_PATH: "path",
    StrategyId.ALICE_K3: "complete",
    StrategyId.ALICE_STAR_FIRST: "star",
    StrategyId.BOB_K4: "complete",
    StrategyId.BOB_CYCLE: "cycle",
    StrategyId.BOB_BIPARTITE: "complete_bipartite",
    StrategyId.BOB_CATERPILLAR: "caterpillar",
    StrategyId.BOB_WHEEL_FIRST: "wheel",
    StrategyId.BOB_WHEEL_W3W4W5: "wheel",
    StrategyId.BOB_GEAR: "gear",
    StrategyId.BOB_HELM: "helm",
    StrategyId.BOB_WEB: "web",
    StrategyId.BOB_HYPERCUBE: "hypercube",
    StrategyId.BOB_PRISM: "prism",
    StrategyId.BOB_PATHPOWER2: "path_power",
}

STRATEGY_FIXED_PARAMS = {
    StrategyId.ALICE_P3_FIRST: {"n": 3},
    StrategyId.BOB_P3_FIRST: {"n": 3},
    StrategyId.ALICE_K3: {"n": 3},
    StrategyId.BOB_K4: {"n": 4},
    StrategyId.BOB_PATHPOWER2: {"k": 2},
}


def _add_family_args(p: argparse.ArgumentParser, required: bool = True):
    p.add_argument("--family", required=required, help="graph family name")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ks", help="comma separated leaf counts for caterpillars")


def _spec_from_args(args, family: str | None = None) -> FamilySpec:
    fam = family or args.family
    payload = {k: getattr(args, k, None) for k in ("n", "p", "q", "r", "t", "k", "ks")}
    return spec_from_request(fam, payload)


def _cmd_solve(args) -> int:
    spec = _spec_from_args(args)
    graph = build_family(spec)
    budget = Budget(args.budget) if args.budget else None
    res = solve(graph, Player(args.first), budget=budget)
    if args.json:
        print(
            json.dumps(
                {
                    "v": 1,
                    "instance": spec.encode(),
                    "first": args.first,
                    "winner": res.winner.value,
                    "nodes_expanded": res.nodes_expanded,
                    "optimal_moves": [list(mv) for mv in res.optimal_moves],
                    "principal_variation": [list(mv) for mv in res.principal_variation],
                }
            )
        )
    else:
        print(f"instance: {spec.label}")
        print(f"first player: {args.first}")
        print(f"winner: {res.winner.value.capitalize()}")
        print(f"nodes expanded: {res.nodes_expanded}")
        print(f"optimal moves: {', '.join(f'({v},{l})' for v, l in res.optimal_moves)}")
        pv = " ".join(f"({v},{l})" for v, l in res.principal_variation)
        print(f"principal variation: {pv}")
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    spec = _spec_from_args(args)
    graph = build_family(spec)
    mode = UP_TO_AUTOMORPHISM if args.mode in ("canonical", UP_TO_AUTOMORPHISM) else RAW
    budget = Budget(args.budget) if args.budget else None
    found = sorted(enumerate_graceful(graph, mode, budget=budget))
    if args.json:
        print(
            json.dumps(
                {
                    "v": 1,
                    "instance": spec.encode(),
                    "mode": mode,
                    "count": len(found),
                    "labelings": [list(f) for f in found],
                }
            )
        )
    else:
        for f in found:
            print(",".join(str(x) for x in f))
        print(f"count: {len(found)} ({mode})")
    return EXIT_OK


def _cmd_verify(args) -> int:
    sid = StrategyId(args.strategy)
    fam = args.family or STRATEGY_FAMILY[sid]
    for key, val in STRATEGY_FIXED_PARAMS.get(sid, {}).items():
        if getattr(args, key, None) is None:
            setattr(args, key, val)
    spec = _spec_from_args(args, family=fam)
    budget = Budget(args.budget) if args.budget else None
    verdict = verify_strategy(sid, spec, Player(args.first), budget=budget)
    if args.json:
        print(json.dumps(verdict.to_json()))
    else:
        print(f"strategy: {sid.value}")
        print(f"instance: {spec.label}, first player: {args.first}")
        print(f"holds: {verdict.holds}")
        print(f"lines checked: {verdict.lines_checked}, off-script: {verdict.offscript_count}")
        if verdict.counterexample:
            seq = " ".join(f"{p}:({v},{l})" for p, v, l in verdict.counterexample)
            print(f"counterexample: {seq}")
    return EXIT_OK if verdict.holds else EXIT_VERIFY_FAILED


def _cmd_table(args) -> int:
    rows = solve_table(ACCEPTANCE_SPECS, budget_per_instance=args.budget)
    short = {Player.ALICE: "A", Player.BOB: "B", None: "?"}
    if args.json:
        print(
            json.dumps(
                {
                    "v": 1,
                    "rows": [
                        {
                            "instance": r.spec.encode(),
                            "label": r.label,
                            "alice_first": short[r.alice_first],
                            "bob_first": short[r.bob_first],
                            "nodes_expanded": r.nodes_expanded,
                            "error": r.error,
                        }
                        for r in rows
                    ],
                }
            )
        )
    else:
        print(f"{'instance':<12}{'Alice first':<13}{'Bob first':<11}nodes")
        for r in rows:
            print(
                f"{r.label:<12}{short[r.alice_first]:<13}{short[r.bob_first]:<11}"
                f"{r.nodes_expanded}{'  ' + r.error if r.error else ''}"
            )
    return EXIT_BUDGET if any(r.error for r in rows) else EXIT_OK


def _render_board(state) -> str:
    g = state.graph
    cells = []
    for v in range(g.n_vertices):
        lab = state.labeling.labels[v]
        cells.append(f"  [{v}] {g.names[v]:<14} = {'.' if lab is None else lab}")
    edges = []
    for u, v in g.edges:
        lu, lv = state.labeling.labels[u], state.labeling.labels[v]
        edges.append(
            f"  {u}--{v}: {'?' if lu is None or lv is None else abs(lu - lv)}"
        )
    return "\n".join(cells) + "\nedges:\n" + "\n".join(edges)


def _cmd_play(args) -> int:
    spec = _spec_from_args(args)
    graph = build_family(spec)
    human = Player(args.side)
    first = Player(args.first)
    state = new_game(graph, first)
    engine = args.engine
    if args.precompute:
        solve(graph, first)  # warm the memo so hints and replies are instant

    def engine_move():
        if engine.startswith("scripted:"):
            try:
                return scripted_move(StrategyId(engine.split(":", 1)[1]), state)
            except (OffScriptError, NotApplicableError):
                return best_move(state)
        return best_move(state)

    print(f"playing {spec.label}: you are {human.value}, labels 0..{graph.m}")
    while status(state) is Status.IN_PROGRESS:
        if state.to_move is human:
            print(_render_board(state))
            try:
                line = input(f"your move as 'vertex label' (free labels shown above): ")
            except EOFError:
                print("input closed; resigning")
                return EXIT_OK
            try:
                v, l = (int(x) for x in line.split())
                state = play_move(state, Move(v, l))
            except (ValueError, GracefulGameError) as exc:
                print(f"rejected: {exc}")
                continue
        else:
            mv = engine_move()
            state = play_move(state, mv)
            print(f"engine plays ({mv.vertex}, {mv.label})")
    print(_render_board(state))
    result = status(state)
    print("Alice wins: the labeling is graceful." if result is Status.ALICE_WON
          else "Bob wins: no graceful completion remains.")
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(session_cap=args.session_cap), host=args.host, port=args.port)
    return EXIT_OK


def _cmd_export_dot(args) -> int:
    spec = _spec_from_args(args)
    graph = build_family(spec)
    text = to_dot(graph)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graceful-game",
        description="Exact engine for the two-player graceful labeling game",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="winner under perfect play")
    _add_family_args(p)
    p.add_argument("--first", choices=["alice", "bob"], required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("enumerate", help="all graceful labelings")
    _add_family_args(p)
    p.add_argument("--mode", choices=["raw", "canonical"], default="raw")
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustively check a scripted strategy")
    p.add_argument("--strategy", required=True, choices=[s.value for s in StrategyId])
    _add_family_args(p, required=False)
    p.add_argument("--first", choices=["alice", "bob"], required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("table", help="desk-scale winners table")
    p.add_argument("--budget", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("play", help="interactive terminal game against the engine")
    _add_family_args(p)
    p.add_argument("--side", choices=["alice", "bob"], default="alice")
    p.add_argument("--first", choices=["alice", "bob"], default="alice")
    p.add_argument("--engine", default="solver", help="'solver' or 'scripted:<strategy>'")
    p.add_argument("--precompute", action="store_true",
                   help="solve the whole game up front for instant replies")
    p.set_defaults(fn=_cmd_play)

    p = sub.add_parser("serve", help="run the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--session-cap", type=int, default=256)
    p.set_defaults(fn=_cmd_serve)

    p = sub.add_parser("export-dot", help="DOT text for a family graph")
    _add_family_args(p)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidParamsError, NotApplicableError, ValueError, KeyError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except IllegalMoveError as exc:
        print(f"illegal move: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
