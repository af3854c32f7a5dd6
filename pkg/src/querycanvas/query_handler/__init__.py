"""Uniform query execution over embedded stores and remote HTTP endpoints."""

from .adapters import (
    EmbeddedAdapter,
    EmbeddedSpec,
    Metadata,
    RemoteAdapter,
    RemoteSpec,
    StoreAdapter,
    connect,
)
from .results import ResultSet, dedupe, reconstruct

__all__ = [
    "EmbeddedAdapter",
    "EmbeddedSpec",
    "Metadata",
    "RemoteAdapter",
    "RemoteSpec",
    "ResultSet",
    "StoreAdapter",
    "connect",
    "dedupe",
    "reconstruct",
]
