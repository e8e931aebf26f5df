"""HTTP play service.

Holds live games in memory.  Clients speak only in primal edge ids and
the wire-state dictionary from board.wire_state; all rules stay server
side.  One lock per game keeps an engine reply atomic with the human
move that triggered it.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field, replace

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .analysis import (
    chains,
    classify_edge_structural,
    decompose,
    find_double_deals,
)
from .board import (
    PrimalBoard,
    dual_to_primal,
    initial_board,
    primal_to_dual,
    render_ascii,
    wire_state,
)
from .core import (
    Boundary,
    Game,
    GameSpec,
    PLAYER_A,
    PLAYER_B,
    Position,
    apply_move,
    initial_position,
    is_legal,
)
from .errors import IllegalMoveError, NarrowDotsError, UnsupportedSpecError
from .solver import MemoTable, solve
from .strategy import Agent, AgentMode, AgentState, supports


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message


class SpecIn(BaseModel):
    game: str
    boundary: str
    n: int


class NewGameIn(BaseModel):
    spec: SpecIn
    engine_role: str = "second"  # first | second | none
    engine_mode: str = "solver"  # constructive | solver


class MoveIn(BaseModel):
    edge: str


@dataclass
class LiveGame:
    spec: GameSpec
    board: PrimalBoard
    position: Position
    engine_player: str | None
    agent: Agent | None
    agent_state: AgentState | None
    owners: dict[int, str] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _parse_spec(raw: SpecIn) -> GameSpec:
    try:
        return GameSpec(Game(raw.game), Boundary(raw.boundary), raw.n)
    except ValueError as exc:
        raise ApiError(422, "bad_spec", str(exc)) from exc


def create_app(frontend_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="narrowdots")
    if frontend_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=frontend_dir, html=True),
                  name="web client")
    games: dict[str, LiveGame] = {}
    ids = itertools.count(1)
    shared_memo = MemoTable()

    @app.exception_handler(ApiError)
    async def _api_error(_req: Request, exc: ApiError):
        return JSONResponse(status_code=exc.status,
                            content={"code": exc.code, "message": exc.message})

    def _get(game_id: str) -> LiveGame:
        g = games.get(game_id)
        if g is None:
            raise ApiError(404, "unknown_game", f"no game {game_id!r}")
        return g

    def _apply_primal(g: LiveGame, edge: str) -> list[str]:
        """Draw one primal edge; returns [edge].  Raises on illegal draws."""
        if edge in g.board.drawn:
            raise ApiError(409, "illegal_move", f"{edge} is already drawn")
        try:
            e = primal_to_dual(g.spec, edge)
        except NarrowDotsError as exc:
            raise ApiError(422, "bad_edge", str(exc)) from exc
        if not is_legal(g.position, e):
            raise ApiError(409, "illegal_move", f"{edge} cuts nothing")
        mover = g.position.to_move
        out = apply_move(g.position, e)
        for c in out.captured:
            g.owners[c] = mover
        g.board = PrimalBoard(g.spec, g.board.drawn | {edge},
                              tuple(sorted(g.owners.items())))
        g.position = out.resulting
        return [edge]

    def _engine_turn(g: LiveGame) -> list[str]:
        """Full engine turn: capturing cuts keep it moving; ends on the
        first non-capturing cut or at game end."""
        if (g.engine_player is None or g.position.is_terminal()
                or g.position.to_move != g.engine_player):
            return []
        plan, g.agent_state = g.agent.take_turn(g.position, g.agent_state)
        drawn: list[str] = []
        for cut in plan.cuts:
            edge = dual_to_primal(g.board, cut)
            drawn += _apply_primal(g, edge)
        return drawn

    @app.post("/games", status_code=201)
    def new_game(body: NewGameIn):
        spec = _parse_spec(body.spec)
        if body.engine_role not in ("first", "second", "none"):
            raise ApiError(422, "bad_engine_role",
                           "engine_role must be first, second or none")
        if body.engine_mode not in ("constructive", "solver"):
            raise ApiError(422, "bad_engine_mode",
                           "engine_mode must be constructive or solver")
        mode = (AgentMode.CONSTRUCTIVE if body.engine_mode == "constructive"
                else AgentMode.SOLVER_ASSISTED)
        if (body.engine_role != "none" and mode is AgentMode.CONSTRUCTIVE
                and not supports(spec)):
            raise ApiError(422, "unsupported_spec",
                           "the constructive strategy does not cover this "
                           "variant; use engine_mode=solver")
        g = LiveGame(
            spec=spec,
            board=initial_board(spec),
            position=initial_position(spec),
            engine_player=({"first": PLAYER_A, "second": PLAYER_B,
                            "none": None}[body.engine_role]),
            agent=Agent(memo=shared_memo) if body.engine_role != "none" else None,
            agent_state=(AgentState(spec=spec, mode=mode)
                         if body.engine_role != "none" else None),
        )
        game_id = str(next(ids))
        games[game_id] = g
        with g.lock:
            engine_moves = _engine_turn(g)
            return {"id": game_id,
                    "state": wire_state(g.board, g.position),
                    "engine_moves": engine_moves}

    @app.get("/games/{game_id}")
    def get_game(game_id: str):
        g = _get(game_id)
        with g.lock:
            return {"id": game_id, "state": wire_state(g.board, g.position),
                    "ascii": render_ascii(g.board)}

    @app.post("/games/{game_id}/moves")
    def make_move(game_id: str, body: MoveIn):
        g = _get(game_id)
        with g.lock:
            if g.position.is_terminal():
                raise ApiError(409, "game_over", "the game is finished")
            if g.position.to_move == g.engine_player:
                raise ApiError(409, "not_your_turn", "it is the engine's turn")
            mover = g.position.to_move
            played = _apply_primal(g, body.edge)
            captured = g.position.to_move == mover and not g.position.is_terminal()
            if g.agent_state is not None and not captured:
                e = primal_to_dual(g.spec, body.edge)
                g.agent_state = replace(g.agent_state, opp_last_base_move=e)
            engine_moves = _engine_turn(g)
            return {"id": game_id, "played": played,
                    "engine_moves": engine_moves,
                    "state": wire_state(g.board, g.position)}

    @app.get("/games/{game_id}/analysis")
    def analysis(game_id: str):
        g = _get(game_id)
        with g.lock:
            p = g.position
            value = None
            best = None
            if not p.is_terminal():
                res = solve(p, shared_memo)
                value = res.value
                best = dual_to_primal(g.board, res.best)
            dec = decompose(p)
            classes = {}
            for edge in sorted(set(wire_state(g.board, p)["legal_moves"])):
                e = primal_to_dual(g.spec, edge)
                classes[edge] = classify_edge_structural(p, e).value
            return {
                "to_move": p.to_move,
                "value_for_mover": value,
                "best_edge": best,
                "edge_classes": classes,
                "chains": [{"edges": [repr(e) for e in ch.edges],
                            "length": ch.length,
                            "category": ch.category.value}
                           for ch in chains(p)],
                "double_deals": [{"x": repr(o.x), "y": repr(o.y),
                                  "pair": list(o.pair)}
                                 for o in find_double_deals(p)],
                "pendant_coins": sorted(dec.pendant_coins),
            }

    return app


app = create_app()
