"""Session persistence behind a narrow interface.

The shipped store is in-memory with an idle TTL; anything that can save,
load and delete by id can replace it.
"""

from __future__ import annotations

import threading
import time
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable, Iterator, Protocol

from ..errors import UnknownSessionError
from .sessions import GameSession

DEFAULT_TTL_SECONDS = 3600.0


class SessionStore(Protocol):
    def save(self, session: GameSession) -> None: ...

    def get(self, session_id: str) -> GameSession: ...

    def delete(self, session_id: str) -> None: ...

    def mutate(self, session_id: str) -> "contextmanager[GameSession]": ...


@dataclass
class _Entry:
    session: GameSession
    expires_at: float
    lock: threading.Lock


class InMemorySessionStore:
    """Dict-backed store; mutations are serialized per session."""

    def __init__(self, ttl: float = DEFAULT_TTL_SECONDS, clock: Callable[[], float] = time.monotonic):
        self._ttl = ttl
        self._clock = clock
        self._entries: dict[str, _Entry] = {}
        self._guard = threading.Lock()

    def _purge(self) -> None:
        now = self._clock()
        dead = [sid for sid, entry in self._entries.items() if entry.expires_at <= now]
        for sid in dead:
            del self._entries[sid]

    def save(self, session: GameSession) -> None:
        with self._guard:
            self._purge()
            self._entries[session.id] = _Entry(
                session=session,
                expires_at=self._clock() + self._ttl,
                lock=threading.Lock(),
            )

    def _live_entry(self, session_id: str) -> _Entry:
        entry = self._entries.get(session_id)
        if entry is None or entry.expires_at <= self._clock():
            raise UnknownSessionError(f"no live game session {session_id!r}")
        # Idle TTL: any access keeps the session alive.
        entry.expires_at = self._clock() + self._ttl
        return entry

    def get(self, session_id: str) -> GameSession:
        with self._guard:
            self._purge()
            return self._live_entry(session_id).session

    def delete(self, session_id: str) -> None:
        with self._guard:
            self._entries.pop(session_id, None)

    @contextmanager
    def mutate(self, session_id: str) -> Iterator[GameSession]:
        with self._guard:
            self._purge()
            entry = self._live_entry(session_id)
        with entry.lock:
            yield entry.session

    def __len__(self) -> int:
        with self._guard:
            self._purge()
            return len(self._entries)
