"""Perfect-play engine and verification harness for 3D chocolate-bar games."""

__version__ = "0.1.0"

from .core import (
    Axis,
    FloorSlope,
    Move,
    Position,
    SlopeFamily,
    SlopeParams,
    apply_move,
    eval_f,
    height_at,
    in_valid_region,
    moves,
    nim_sum,
    partial_sums,
)
from .errors import (
    BudgetExceededError,
    ChocbarError,
    FamilyMismatchError,
    IllegalMoveError,
    NoMoveError,
    NotApplicableError,
    OutOfDomainError,
)
from .solver import OutcomeClass, SolveCache, classify, engine_move, grundy, mex, winning_moves
from .theory import (
    ConjectureFamily,
    CutCase,
    SBand,
    SRelation,
    construct_winning_move,
    p_closed_form_4m1,
    p_closed_form_even,
    p_closed_form_odd,
    s_relation,
)

__all__ = [
    "__version__",
    "Axis",
    "FloorSlope",
    "Move",
    "Position",
    "SlopeFamily",
    "SlopeParams",
    "apply_move",
    "eval_f",
    "height_at",
    "in_valid_region",
    "moves",
    "nim_sum",
    "partial_sums",
    "BudgetExceededError",
    "ChocbarError",
    "FamilyMismatchError",
    "IllegalMoveError",
    "NoMoveError",
    "NotApplicableError",
    "OutOfDomainError",
    "OutcomeClass",
    "SolveCache",
    "classify",
    "engine_move",
    "grundy",
    "mex",
    "winning_moves",
    "ConjectureFamily",
    "CutCase",
    "SBand",
    "SRelation",
    "construct_winning_move",
    "p_closed_form_4m1",
    "p_closed_form_even",
    "p_closed_form_odd",
    "s_relation",
]
