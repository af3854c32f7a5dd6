"""Force-directed layout with a compiled hot kernel and a numpy fallback.

The O(|V|^2) force sweep is the only hot loop in the package, so it exists
twice: a Cython extension (`_step_ext`, built by setup.py) and a pure-numpy
implementation (`_step_py`). The compiled kernel is picked at import when
present; set QUERYCANVAS_LAYOUT_BACKEND=python|compiled to override, and see
benchmarks/layout_bench.py for a speed comparison of the two.
"""

from __future__ import annotations

import os

from . import _step_py

try:
    from . import _step_ext
except ImportError:
    _step_ext = None

from .engine import PrunedGraph, initial_positions, layout, prune_for_layout
from .params import LayoutParams, LayoutResult

_BACKENDS = {"python": _step_py.step}
if _step_ext is not None:
    _BACKENDS["compiled"] = _step_ext.step


def available_backends() -> list[str]:
    return sorted(_BACKENDS)


def selected_backend() -> str:
    choice = os.environ.get("QUERYCANVAS_LAYOUT_BACKEND", "auto")
    if choice in _BACKENDS:
        return choice
    return "compiled" if "compiled" in _BACKENDS else "python"


def get_step(backend: str | None = None):
    name = backend or selected_backend()
    if name not in _BACKENDS:
        raise ValueError(f"unknown layout backend {name!r}; available: {available_backends()}")
    return _BACKENDS[name]


__all__ = [
    "LayoutParams",
    "LayoutResult",
    "PrunedGraph",
    "available_backends",
    "get_step",
    "initial_positions",
    "layout",
    "prune_for_layout",
    "selected_backend",
]
