"""HTTP API server: sessions, pattern jobs, translation, execution."""

from .app import create_app
from .sessions import NotFoundError, SessionState, SessionStore

__all__ = ["NotFoundError", "SessionState", "SessionStore", "create_app"]
