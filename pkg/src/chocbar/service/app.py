"""FastAPI application wiring the core package to HTTP."""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .. import __version__
from ..core import Axis, FloorSlope, Position, in_valid_region, moves
from ..errors import (
    BudgetExceededError,
    IllegalMoveError,
    NoMoveError,
    UnknownSessionError,
    WrongTurnError,
)
from ..solver import SolveCache, classify, winning_moves
from ..solver import grundy as solve_grundy
from .models import (
    AnalysisModel,
    CreateGameRequest,
    GameSessionModel,
    HealthModel,
    LegalMovesModel,
    MoveRequest,
    move_model,
    session_model,
)
from .sessions import apply_engine_move, apply_human_move, create_session, legal_move_summary, session_hint
from .store import DEFAULT_TTL_SECONDS, InMemorySessionStore


def _error(status: int, code: str, message: str, details: dict | None = None) -> JSONResponse:
    body: dict = {"error": code, "message": message}
    if details is not None:
        body["details"] = details
    return JSONResponse(status_code=status, content=body)


def create_app(
    static_dir: str | Path | None = None,
    budget: int | None = None,
    session_ttl: float = DEFAULT_TTL_SECONDS,
    store: InMemorySessionStore | None = None,
) -> FastAPI:
    app = FastAPI(title="chocbar", version=__version__)
    app.state.store = store if store is not None else InMemorySessionStore(ttl=session_ttl)
    # One shared cache: entries are write-once and idempotent, safe for the
    # threadpool that serves sync endpoints.
    app.state.cache = SolveCache()
    app.state.budget = budget

    def _session_response(session) -> GameSessionModel:
        hint = session_hint(session, app.state.cache, app.state.budget)
        return session_model(session, hint)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return _error(400, "invalid-params", "request failed validation", {"errors": exc.errors()})

    @app.exception_handler(ValueError)
    async def on_value_error(request: Request, exc: ValueError):
        return _error(400, "invalid-params", str(exc))

    @app.exception_handler(UnknownSessionError)
    async def on_unknown_session(request: Request, exc: UnknownSessionError):
        return _error(404, "unknown-game", str(exc))

    @app.exception_handler(WrongTurnError)
    async def on_wrong_turn(request: Request, exc: WrongTurnError):
        return _error(409, "wrong-turn", str(exc))

    @app.exception_handler(NoMoveError)
    async def on_no_move(request: Request, exc: NoMoveError):
        return _error(409, "game-over", str(exc))

    @app.exception_handler(BudgetExceededError)
    async def on_budget(request: Request, exc: BudgetExceededError):
        return _error(
            503,
            "budget-exceeded",
            str(exc),
            {"budget": exc.budget, "estimate": exc.estimate},
        )

    @app.get("/api/health", response_model=HealthModel)
    def health() -> HealthModel:
        return HealthModel(status="ok", version=__version__)

    @app.post("/api/games", response_model=GameSessionModel, status_code=201)
    def post_game(req: CreateGameRequest) -> GameSessionModel:
        session = create_session(
            k=req.k,
            x=req.x,
            y=req.y,
            z=req.z,
            human_moves_first=req.human_moves_first,
            hints_enabled=req.hints,
            cache=app.state.cache,
            budget=app.state.budget,
        )
        app.state.store.save(session)
        return _session_response(session)

    @app.get("/api/games/{session_id}", response_model=GameSessionModel)
    def get_game(session_id: str) -> GameSessionModel:
        return _session_response(app.state.store.get(session_id))

    @app.post("/api/games/{session_id}/moves", response_model=GameSessionModel)
    def post_move(session_id: str, req: MoveRequest):
        with app.state.store.mutate(session_id) as session:
            try:
                apply_human_move(
                    session,
                    Axis(req.axis),
                    req.target,
                    cache=app.state.cache,
                    budget=app.state.budget,
                )
            except IllegalMoveError as exc:
                return _error(
                    409,
                    "illegal-move",
                    str(exc),
                    {"legal_targets": legal_move_summary(session.slope, session.current)},
                )
            return _session_response(session)

    @app.post("/api/games/{session_id}/engine-move", response_model=GameSessionModel)
    def post_engine_move(session_id: str):
        with app.state.store.mutate(session_id) as session:
            apply_engine_move(session, cache=app.state.cache, budget=app.state.budget)
            return _session_response(session)

    @app.get("/api/games/{session_id}/legal-moves", response_model=LegalMovesModel)
    def get_legal_moves(session_id: str) -> LegalMovesModel:
        session = app.state.store.get(session_id)
        legal = moves(session.slope, session.current)
        return LegalMovesModel(
            position=session.current.as_dict(),
            moves=[move_model(m) for m in legal],
        )

    @app.get("/api/analyze", response_model=AnalysisModel, response_model_exclude_none=True)
    def analyze(k: int, x: int, y: int, z: int, grundy: bool = False) -> AnalysisModel:
        if k < 1:
            raise ValueError("k must be >= 1")
        f = FloorSlope(k)
        pos = Position(x, y, z)
        outcome = classify(f, pos, app.state.cache, app.state.budget)
        wins = winning_moves(f, pos, app.state.cache, app.state.budget)
        g: int | None = None
        if grundy:
            g = solve_grundy(f, pos, app.state.cache, app.state.budget)
        return AnalysisModel(
            outcome=outcome.value,
            in_valid_region=in_valid_region(f, pos),
            winning_move_count=len(wins),
            grundy=g,
            best_move=move_model(wins[0]) if wins else None,
        )

    if static_dir is not None:
        root = Path(static_dir)
        if root.is_dir():
            app.mount("/", StaticFiles(directory=root, html=True), name="ui")

    return app


app = create_app()
