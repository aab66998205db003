"""Ground-truth engine: Grundy numbers, P/N classification, winning-move search.

Two independent routes are kept side by side on purpose: `grundy` runs the
mex recursion over the move graph, while `classify` runs a boolean
retrograde pass (a position is P exactly when every successor is N).  The
test suite cross-checks them everywhere; grid verification uses the
boolean route because it is the cheaper of the two.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum

from .core import HeightFunction, Move, Position, iter_moves, successor_tuples
from .errors import BudgetExceededError, NoMoveError

DEFAULT_STATE_BUDGET = 50_000_000
BUDGET_ENV_VAR = "CHOCBAR_BUDGET"

_Triple = tuple[int, int, int]


class OutcomeClass(str, Enum):
    P = "P"
    N = "N"


def default_budget() -> int:
    """State budget from the environment, falling back to the built-in cap."""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_STATE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be >= 1, got {value}")
    return value


@dataclass
class SolveCache:
    """Memo tables keyed by height function, then by position tuple.

    Entries are written once and never change; a warm cache returns exactly
    what a cold recomputation would.  Within one CPython process the dict
    writes are atomic and idempotent, so concurrent readers are safe;
    workers that want full isolation use their own instance.
    """

    _grundy: dict[HeightFunction, dict[_Triple, int]] = field(default_factory=dict)
    _outcome: dict[HeightFunction, dict[_Triple, bool]] = field(default_factory=dict)

    def grundy_table(self, f: HeightFunction) -> dict[_Triple, int]:
        return self._grundy.setdefault(f, {})

    def outcome_table(self, f: HeightFunction) -> dict[_Triple, bool]:
        return self._outcome.setdefault(f, {})

    def __len__(self) -> int:
        return sum(len(t) for t in self._grundy.values()) + sum(
            len(t) for t in self._outcome.values()
        )


def mex(values) -> int:
    """Least non-negative integer not in `values`."""
    present = set(values)
    g = 0
    while g in present:
        g += 1
    return g


def reachable_estimate(f: HeightFunction, pos: Position) -> int:
    """Upper-bound estimate of the positions a solve can touch.

    Everything reachable lives in the clamped box below (x, z) plus, when
    the start lies above the slope, the y column that descends back into it.
    """
    top = f(pos.x, pos.z)
    clamped = min(pos.y, top)
    return (pos.x + 1) * (pos.z + 1) * (clamped + 1) + max(0, pos.y - top)


def check_budget(f: HeightFunction, pos: Position, budget: int | None) -> None:
    cap = default_budget() if budget is None else budget
    estimate = reachable_estimate(f, pos)
    if estimate > cap:
        raise BudgetExceededError(
            f"position {pos} has an estimated {estimate} reachable states, "
            f"over the solver budget of {cap}",
            budget=cap,
            estimate=estimate,
        )


def grundy(
    f: HeightFunction,
    pos: Position,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> int:
    """Exact Grundy number of `pos` under height function `f`."""
    check_budget(f, pos, budget)
    if cache is None:
        cache = SolveCache()
    table = cache.grundy_table(f)
    root = pos.as_tuple()
    if root in table:
        return table[root]
    # Iterative post-order over the acyclic move graph; recursion depth
    # would scale with x+y+z otherwise.
    stack: list[_Triple] = [root]
    while stack:
        node = stack[-1]
        if node in table:
            stack.pop()
            continue
        succs = list(successor_tuples(f, *node))
        pending = [s for s in succs if s not in table]
        if pending:
            stack.extend(pending)
        else:
            table[node] = mex(table[s] for s in succs)
            stack.pop()
    return table[root]


def classify(
    f: HeightFunction,
    pos: Position,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> OutcomeClass:
    """Retrograde P/N label: P exactly when every successor is N."""
    check_budget(f, pos, budget)
    if cache is None:
        cache = SolveCache()
    table = cache.outcome_table(f)
    root = pos.as_tuple()
    if root not in table:
        _fill_outcomes(f, root, table)
    return OutcomeClass.P if table[root] else OutcomeClass.N


def _fill_outcomes(f: HeightFunction, root: _Triple, table: dict[_Triple, bool]) -> None:
    stack: list[_Triple] = [root]
    while stack:
        node = stack[-1]
        if node in table:
            stack.pop()
            continue
        succs = list(successor_tuples(f, *node))
        pending = [s for s in succs if s not in table]
        if pending:
            stack.extend(pending)
        else:
            table[node] = not any(table[s] for s in succs)
            stack.pop()


def winning_moves(
    f: HeightFunction,
    pos: Position,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> list[Move]:
    """Every cut whose result is a P-position, in deterministic order."""
    check_budget(f, pos, budget)
    if cache is None:
        cache = SolveCache()
    table = cache.outcome_table(f)
    found: list[Move] = []
    for move in iter_moves(f, pos):
        key = move.result.as_tuple()
        if key not in table:
            _fill_outcomes(f, key, table)
        if table[key]:
            found.append(move)
    return found


def engine_move(
    f: HeightFunction,
    pos: Position,
    cache: SolveCache | None = None,
    budget: int | None = None,
) -> Move:
    """The engine's play: first winning move, else the cut with the
    lexicographically smallest result."""
    if pos.is_terminal:
        raise NoMoveError("no move exists from the terminal position")
    wins = winning_moves(f, pos, cache, budget)
    if wins:
        return wins[0]
    return min(iter_moves(f, pos), key=lambda m: m.result.as_tuple())


def classify_tuple(
    f: HeightFunction,
    xyz: _Triple,
    cache: SolveCache,
) -> bool:
    """Fast-path boolean classification for grid sweeps; True means P.

    Callers are expected to have budget-checked the enclosing grid.
    """
    table = cache.outcome_table(f)
    if xyz not in table:
        _fill_outcomes(f, xyz, table)
    return table[xyz]
