"""Pydantic request/response models for the HTTP API."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from .sessions import GameSession


class PositionModel(BaseModel):
    x: int = Field(ge=0)
    y: int = Field(ge=0)
    z: int = Field(ge=0)


class CreateGameRequest(BaseModel):
    k: int = Field(ge=1)
    x: int = Field(ge=0)
    y: int = Field(ge=0)
    z: int = Field(ge=0)
    human_moves_first: bool = True
    hints: bool = False


class MoveRequest(BaseModel):
    axis: Literal["x", "y", "z"]
    target: int = Field(ge=0)


class MoveModel(BaseModel):
    axis: str
    target: int
    result: PositionModel


class HistoryEntryModel(BaseModel):
    mover: str
    move: MoveModel


class HintModel(BaseModel):
    outcome: str
    source: str
    conjectural: bool


class GameSessionModel(BaseModel):
    id: str
    k: int
    position: PositionModel
    status: str
    human_moves_first: bool
    hints_enabled: bool
    history: list[HistoryEntryModel]
    winner: Optional[str] = None
    hint: Optional[HintModel] = None


class LegalMovesModel(BaseModel):
    position: PositionModel
    moves: list[MoveModel]


class AnalysisModel(BaseModel):
    outcome: str = Field(serialization_alias="class")
    in_valid_region: bool
    winning_move_count: int
    grundy: Optional[int] = None
    best_move: Optional[MoveModel] = None


class HealthModel(BaseModel):
    status: str
    version: str


def move_model(move) -> MoveModel:
    return MoveModel(
        axis=move.axis.value,
        target=move.target,
        result=PositionModel(**move.result.as_dict()),
    )


def session_model(session: GameSession, hint: dict | None) -> GameSessionModel:
    return GameSessionModel(
        id=session.id,
        k=session.params.k,
        position=PositionModel(**session.current.as_dict()),
        status=session.status.value,
        human_moves_first=session.human_moves_first,
        hints_enabled=session.hints_enabled,
        history=[
            HistoryEntryModel(mover=entry.mover.value, move=move_model(entry.move))
            for entry in session.history
        ],
        winner=session.winner.value if session.winner else None,
        hint=HintModel(**hint) if hint else None,
    )
