"""HTTP play service: in-memory sessions, engine replies, JSON everywhere.

The store is stateful, the protocol stateless: sessions live in an LRU dict
keyed by random 128-bit ids, each guarded by its own lock.  Engine replies
are computed synchronously inside the move request; scripted engines fall
back to the perfect-play solver when their script runs out of cases.
"""

from __future__ import annotations

import secrets
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .engine import GameState, Move, Player, Status, legal_moves, new_game, play_move, status
from .errors import (
    GameOverError,
    GracefulGameError,
    IllegalMoveError,
    InvalidParamsError,
    NotApplicableError,
    NotYourTurnError,
    OffScriptError,
)
from .graphs import FAMILIES, FamilySpec, build_family, layout
from .solver import best_move, solve
from .strategies import StrategyId, scripted_move

FAMILY_PARAMS = {
    "path": ("n",),
    "cycle": ("n",),
    "complete": ("n",),
    "complete_bipartite": ("p", "q"),
    "star": ("q",),
    "caterpillar": ("ks",),
    "wheel": ("n",),
    "gear": ("n",),
    "helm": ("n",),
    "web": ("t", "n"),
    "hypercube": ("n",),
    "prism": ("r",),
    "path_power": ("n", "k"),
}

PARAM_BOUNDS = {
    "path": {"n": 1},
    "cycle": {"n": 3},
    "complete": {"n": 1},
    "complete_bipartite": {"p": 1, "q": 1},
    "star": {"q": 1},
    "caterpillar": {},
    "wheel": {"n": 3},
    "gear": {"n": 3},
    "helm": {"n": 3},
    "web": {"t": 2, "n": 3},
    "hypercube": {"n": 1},
    "prism": {"r": 3},
    "path_power": {"n": 1, "k": 1},
}


def spec_from_request(family: str, payload: dict) -> FamilySpec:
    family = family.replace("-", "_")
    if family not in FAMILIES:
        raise InvalidParamsError(f"unknown family {family!r}")
    names = FAMILY_PARAMS[family]
    params: list[int] = []
    for name in names:
        if name == "ks":
            raw = payload.get("ks")
            if raw is None:
                raise InvalidParamsError("caterpillar needs ks (leaf counts)")
            if isinstance(raw, str):
                raw = [int(x) for x in raw.split(",") if x != ""]
            params.extend(int(x) for x in raw)
        else:
            if name not in payload or payload[name] is None:
                raise InvalidParamsError(f"{family} needs parameter {name}")
            params.append(int(payload[name]))
    return FamilySpec(family, tuple(params))


@dataclass
class Session:
    session_id: str
    state: GameState
    human: Player
    engine: str  # "solver" or "scripted:<strategy-id>"
    created_at: float = field(default_factory=time.time)
    lock: threading.RLock = field(default_factory=threading.RLock)

    @property
    def engine_side(self) -> Player:
        return self.human.other


def _engine_move(session: Session) -> Move:
    if session.engine.startswith("scripted:"):
        sid = StrategyId(session.engine.split(":", 1)[1])
        try:
            return scripted_move(sid, session.state)
        except (OffScriptError, NotApplicableError):
            return best_move(session.state)
    return best_move(session.state)


def _drive_engine(session: Session) -> None:
    if (
        status(session.state) is Status.IN_PROGRESS
        and session.state.to_move is session.engine_side
    ):
        session.state = play_move(session.state, _engine_move(session))


def session_json(session: Session) -> dict:
    data = session.state.to_json()
    data.update(
        {
            "session_id": session.session_id,
            "human": session.human.value,
            "engine": session.engine,
            "layout": [list(pt) for pt in layout(session.state.graph)],
        }
    )
    return data


def _error(code: str, message: str, http_status: int) -> JSONResponse:
    return JSONResponse(
        status_code=http_status,
        content={"v": 1, "error": {"code": code, "message": message}},
    )


def create_app(session_cap: int = 256) -> FastAPI:
    app = FastAPI(title="graceful-game", version="1")
    from fastapi.middleware.cors import CORSMiddleware

    # the browser board is served as static files from another origin
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    sessions: OrderedDict[str, Session] = OrderedDict()
    store_lock = threading.RLock()

    def _get(session_id: str) -> Session | None:
        with store_lock:
            s = sessions.get(session_id)
            if s is not None:
                sessions.move_to_end(session_id)
            return s

    @app.exception_handler(GracefulGameError)
    async def _domain_error(request: Request, exc: GracefulGameError):
        if isinstance(exc, IllegalMoveError):
            return _error(exc.reason, str(exc), 409)
        if isinstance(exc, NotYourTurnError):
            return _error("not-your-turn", str(exc), 409)
        if isinstance(exc, GameOverError):
            return _error("game-over", str(exc), 409)
        if isinstance(exc, (InvalidParamsError, NotApplicableError)):
            return _error("bad-request", str(exc), 400)
        return _error("engine-error", str(exc), 500)

    @app.get("/families")
    def families():
        return {
            "v": 1,
            "families": [
                {
                    "family": fam,
                    "params": [
                        {"name": p, "min": PARAM_BOUNDS[fam].get(p, 0), "kind": "list" if p == "ks" else "int"}
                        for p in FAMILY_PARAMS[fam]
                    ],
                }
                for fam in FAMILIES
            ],
        }

    @app.post("/games")
    async def create_game(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return _error("bad-request", "body must be JSON", 400)
        family = payload.get("family")
        if not family:
            return _error("bad-request", "missing family", 400)
        spec = spec_from_request(family, payload)
        graph = build_family(spec)
        try:
            first = Player(payload.get("first", "alice"))
            human = Player(payload.get("human", "alice"))
        except ValueError:
            return _error("bad-request", "players are 'alice' or 'bob'", 400)
        engine = payload.get("engine", "solver")
        if engine != "solver" and not engine.startswith("scripted:"):
            return _error("bad-request", f"unknown engine {engine!r}", 400)
        if engine.startswith("scripted:"):
            try:
                StrategyId(engine.split(":", 1)[1])
            except ValueError:
                return _error("bad-request", f"unknown strategy in {engine!r}", 400)
        session = Session(secrets.token_hex(16), new_game(graph, first), human, engine)
        if payload.get("precompute"):
            solve(graph, first)
        with session.lock:
            _drive_engine(session)
        with store_lock:
            sessions[session.session_id] = session
            while len(sessions) > session_cap:
                sessions.popitem(last=False)
        return session_json(session)

    @app.get("/games/{session_id}")
    def get_game(session_id: str):
        session = _get(session_id)
        if session is None:
            return _error("not-found", "no such session", 404)
        return session_json(session)

    @app.post("/games/{session_id}/moves")
    async def post_move(session_id: str, request: Request):
        session = _get(session_id)
        if session is None:
            return _error("not-found", "no such session", 404)
        try:
            payload = await request.json()
            mv = Move(int(payload["vertex"]), int(payload["label"]))
        except Exception:
            return _error("bad-request", "move needs integer vertex and label", 400)
        with session.lock:
            if status(session.state) is not Status.IN_PROGRESS:
                raise GameOverError("the game is over")
            if session.state.to_move is not session.human:
                raise NotYourTurnError("the engine is to move")
            session.state = play_move(session.state, mv)
            _drive_engine(session)
            return session_json(session)

    @app.get("/games/{session_id}/hint")
    def hint(session_id: str):
        session = _get(session_id)
        if session is None:
            return _error("not-found", "no such session", 404)
        with session.lock:
            if status(session.state) is not Status.IN_PROGRESS:
                raise GameOverError("the game is over")
            if session.state.to_move is not session.human:
                raise NotYourTurnError("the engine is to move")
            mv = best_move(session.state)
            return {"v": 1, "move": {"vertex": mv.vertex, "label": mv.label}}

    @app.get("/games/{session_id}/legal-moves")
    def legal(session_id: str):
        session = _get(session_id)
        if session is None:
            return _error("not-found", "no such session", 404)
        with session.lock:
            return {
                "v": 1,
                "moves": [
                    {"vertex": mv.vertex, "label": mv.label}
                    for mv in legal_moves(session.state)
                ],
            }

    @app.delete("/games/{session_id}")
    def delete_game(session_id: str):
        with store_lock:
            found = sessions.pop(session_id, None)
        if found is None:
            return _error("not-found", "no such session", 404)
        return {"v": 1, "deleted": True}

    return app
