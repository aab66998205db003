"""Game-session state machine: turns, legality, win detection, hints.

A session holds one bar being played between a human and the engine.  All
mutation goes through `apply_human_move` / `apply_engine_move`; the store
serializes those per session, so the functions themselves stay lock-free.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from enum import Enum

from ..core import Axis, FloorSlope, Move, Position, SlopeParams, apply_move
from ..errors import WrongTurnError
from ..solver import SolveCache, check_budget, classify, engine_move
from ..theory import predict


class Mover(str, Enum):
    HUMAN = "human"
    ENGINE = "engine"


class GameStatus(str, Enum):
    IN_PROGRESS = "in-progress"
    HUMAN_WON = "human-won"
    ENGINE_WON = "engine-won"


@dataclass(frozen=True, slots=True)
class HistoryEntry:
    mover: Mover
    move: Move


@dataclass
class GameSession:
    id: str
    params: SlopeParams
    current: Position
    human_moves_first: bool
    hints_enabled: bool
    history: list[HistoryEntry] = field(default_factory=list)
    status: GameStatus = GameStatus.IN_PROGRESS

    @property
    def slope(self) -> FloorSlope:
        return FloorSlope(self.params.k)

    @property
    def winner(self) -> Mover | None:
        if self.status is GameStatus.HUMAN_WON:
            return Mover.HUMAN
        if self.status is GameStatus.ENGINE_WON:
            return Mover.ENGINE
        return None

    def mover_on_turn(self) -> Mover | None:
        if self.status is not GameStatus.IN_PROGRESS:
            return None
        first = Mover.HUMAN if self.human_moves_first else Mover.ENGINE
        second = Mover.ENGINE if self.human_moves_first else Mover.HUMAN
        return first if len(self.history) % 2 == 0 else second


def create_session(
    k: int,
    x: int,
    y: int,
    z: int,
    human_moves_first: bool = True,
    hints_enabled: bool = False,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> GameSession:
    """Build a fresh session; if the engine opens, its move is applied here."""
    params = SlopeParams(k)
    start = Position(x, y, z)
    if start.is_terminal:
        raise ValueError("starting position is already the single bitter box")
    check_budget(FloorSlope(k), start, budget)
    session = GameSession(
        id=uuid.uuid4().hex,
        params=params,
        current=start,
        human_moves_first=human_moves_first,
        hints_enabled=hints_enabled,
    )
    if not human_moves_first:
        apply_engine_move(session, cache=cache, budget=budget)
    return session


def _record(session: GameSession, mover: Mover, move: Move) -> None:
    session.history.append(HistoryEntry(mover=mover, move=move))
    session.current = move.result
    if move.result.is_terminal:
        session.status = GameStatus.HUMAN_WON if mover is Mover.HUMAN else GameStatus.ENGINE_WON


def apply_engine_move(
    session: GameSession,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> Move:
    if session.mover_on_turn() is not Mover.ENGINE:
        raise WrongTurnError("it is not the engine's turn")
    move = engine_move(session.slope, session.current, cache, budget)
    _record(session, Mover.ENGINE, move)
    return move


def apply_human_move(
    session: GameSession,
    axis: Axis,
    target: int,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> tuple[Move, Move | None]:
    """Apply the human's cut; the engine replies in the same call unless the
    human just won.  Returns (human move, engine reply or None)."""
    if session.mover_on_turn() is not Mover.HUMAN:
        raise WrongTurnError("it is not the human's turn")
    result = apply_move(session.slope, session.current, axis, target)
    move = Move(Axis(axis), target, result)
    _record(session, Mover.HUMAN, move)
    reply: Move | None = None
    if session.status is GameStatus.IN_PROGRESS:
        reply = apply_engine_move(session, cache=cache, budget=budget)
    return move, reply


def session_hint(session: GameSession, cache: SolveCache | None = None, budget: int | None = None) -> dict | None:
    """P/N hint for the current position, labeled with where it came from.

    Closed-form answers are used where a rule covers the position; the
    oracle fills the gaps.  Conjectured rules are flagged as such.
    """
    if not session.hints_enabled or session.status is not GameStatus.IN_PROGRESS:
        return None
    pos = session.current
    prediction = predict(session.params, pos)
    if prediction.in_scope:
        outcome = "P" if prediction.is_p else "N"
        source = "conjectured-rule" if prediction.conjectural else "proved-rule"
        return {"outcome": outcome, "source": source, "conjectural": prediction.conjectural}
    outcome = classify(session.slope, pos, cache, budget).value
    return {"outcome": outcome, "source": "oracle", "conjectural": False}


def legal_move_summary(f: FloorSlope, pos: Position) -> dict:
    """Per-axis inclusive target ranges, for illegal-move error payloads."""
    return {
        "x": {"min": 0, "max": pos.x - 1} if pos.x > 0 else None,
        "y": {"min": 0, "max": pos.y - 1} if pos.y > 0 else None,
        "z": {"min": 0, "max": pos.z - 1} if pos.z > 0 else None,
    }
