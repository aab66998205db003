"""Exception types shared across the package."""


class ChocbarError(Exception):
    """Base class for all domain errors raised by this package."""


class IllegalMoveError(ChocbarError):
    """A cut that the move rules do not permit from the given position."""


class NoMoveError(ChocbarError):
    """The engine was asked to move from the terminal position."""


class BudgetExceededError(ChocbarError):
    """Solving this instance would exceed the configured state budget."""

    def __init__(self, message: str, *, budget: int, estimate: int):
        super().__init__(message)
        self.budget = budget
        self.estimate = estimate


class FamilyMismatchError(ChocbarError):
    """A closed-form rule was applied to a slope outside its k family."""


class NotApplicableError(ChocbarError):
    """Preconditions of the constructive winning-move procedure do not hold."""


class OutOfDomainError(ChocbarError):
    """Position lies outside the domain bound of the even-k rule."""


class UnknownSessionError(ChocbarError):
    """No live game session with the requested id."""


class WrongTurnError(ChocbarError):
    """A move was posted out of turn or after the game ended."""
