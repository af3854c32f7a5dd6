"""Layout parameters and results."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..graph_core import NodeId


@dataclass(frozen=True)
class LayoutParams:
    """Knobs for the modified force-directed simulation.

    d_opt is the constant optimal distance between connected pairs; repulsion
    is cut off beyond r_max so disjoint subgraphs stop pushing each other
    away. The cooling step decays linearly from `initial_step` (default
    0.1 * d_opt * sqrt(|V|), resolved at run time) down to `final_step`
    (default 0.001 * d_opt) over `iterations` steps.
    """

    d_opt: float = 1.0
    r_max: float = 4.0
    iterations: int = 300
    initial_step: float | None = None
    final_step: float | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.d_opt <= 0:
            raise ValueError("d_opt must be positive")
        if self.r_max < self.d_opt:
            raise ValueError("r_max must be at least d_opt")
        if self.iterations < 1:
            raise ValueError("iterations must be at least 1")

    def temperatures(self, n_nodes: int) -> list[float]:
        t0 = self.initial_step if self.initial_step is not None else 0.1 * self.d_opt * n_nodes**0.5
        t1 = self.final_step if self.final_step is not None else 0.001 * self.d_opt
        k = self.iterations
        if k == 1:
            return [t0]
        return [t0 + (t1 - t0) * (i / (k - 1)) for i in range(k)]


@dataclass
class LayoutResult:
    positions: dict[NodeId, tuple[float, float]] = field(default_factory=dict)
    pruned: dict[str, int] = field(default_factory=lambda: {"self_loops": 0, "parallel": 0})

    def to_document(self) -> dict:
        return {
            "positions": [
                {"id": node_id, "x": x, "y": y} for node_id, (x, y) in sorted(self.positions.items())
            ],
            "pruned": dict(self.pruned),
        }
