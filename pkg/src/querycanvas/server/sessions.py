"""In-memory session store with TTL eviction.

A session owns one adapter plus everything derived from it: the metadata
snapshot, the current query, the mined patterns, and the last result. All of
that is invalidated together when the session reconnects, so stale artifacts
can never outlive the adapter that produced them.
"""

from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field

from ..errors import QuerycanvasError
from ..query_handler import Metadata, StoreAdapter


class NotFoundError(QuerycanvasError):
    code = "not-found"


@dataclass
class SessionState:
    id: str
    adapter: StoreAdapter
    metadata: Metadata
    patterns: object | None = None
    query: object | None = None
    last_result: object | None = None
    last_layout: object | None = None
    job: dict | None = None
    touched: float = 0.0
    execute_gate: threading.Lock = field(default_factory=threading.Lock)

    def reset_derived(self) -> None:
        self.patterns = None
        self.query = None
        self.last_result = None
        self.last_layout = None
        self.job = None


class SessionStore:
    def __init__(self, ttl: float = 3600.0, clock=time.monotonic):
        self.ttl = ttl
        self.clock = clock
        self._sessions: dict[str, SessionState] = {}
        self._lock = threading.Lock()

    def _sweep(self) -> None:
        now = self.clock()
        for sid in [s for s, state in self._sessions.items() if now - state.touched > self.ttl]:
            state = self._sessions.pop(sid)
            state.adapter.close()

    def create(self, adapter, metadata: Metadata, session_id: str | None = None) -> SessionState:
        with self._lock:
            self._sweep()
            state = SessionState(
                id=session_id or uuid.uuid4().hex,
                adapter=adapter,
                metadata=metadata,
                touched=self.clock(),
            )
            old = self._sessions.get(state.id)
            if old is not None:
                old.adapter.close()
            self._sessions[state.id] = state
            return state

    def get(self, session_id: str) -> SessionState:
        with self._lock:
            self._sweep()
            state = self._sessions.get(session_id)
            if state is None:
                raise NotFoundError(f"no session {session_id!r}")
            state.touched = self.clock()
            return state

    def replace_adapter(self, session_id: str, adapter, metadata: Metadata) -> SessionState:
        """Reconnect: swap the adapter and drop everything derived from the old one."""
        state = self.get(session_id)
        state.adapter.close()
        state.adapter = adapter
        state.metadata = metadata
        state.reset_derived()
        return state
