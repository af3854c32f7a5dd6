"""Top-k edge-diversified pattern mining."""

from .miner import (
    ORACLE_EDGE_LIMIT,
    ORACLE_K_LIMIT,
    ORACLE_TAU_LIMIT,
    Pattern,
    PatternSet,
    SwapScores,
    brute_force_optimum,
    coverage,
    enumerate_candidates,
    mine,
    swap_decision,
    swap_scores,
)
from .shapes import Shape, canonicalize

__all__ = [
    "ORACLE_EDGE_LIMIT",
    "ORACLE_K_LIMIT",
    "ORACLE_TAU_LIMIT",
    "Pattern",
    "PatternSet",
    "Shape",
    "SwapScores",
    "brute_force_optimum",
    "canonicalize",
    "coverage",
    "enumerate_candidates",
    "mine",
    "swap_decision",
    "swap_scores",
]
