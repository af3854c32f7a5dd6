"""Pure-numpy force step; fallback when the compiled kernel is unavailable.

Same force laws as the compiled kernel: repulsion d_opt^2/d between all pairs
closer than r_max, attraction d^2/d_opt along edges, displacement clamped to
the current temperature. Row blocks keep the pairwise working set bounded so
large graphs do not allocate an n x n matrix all at once.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 256


def step(
    pos: np.ndarray,
    edges: np.ndarray,
    d_opt: float,
    r_max: float,
    temp: float,
    disp: np.ndarray,
) -> None:
    n = pos.shape[0]
    disp[:] = 0.0

    for start in range(0, n, _BLOCK):
        block = pos[start : start + _BLOCK]
        diff = block[:, None, :] - pos[None, :, :]
        dist = np.hypot(diff[..., 0], diff[..., 1])
        active = (dist > 0.0) & (dist < r_max)
        safe = np.where(dist > 0.0, dist, 1.0)
        # direction * d_opt^2 / d  ==  diff * d_opt^2 / d^2
        factor = np.where(active, (d_opt * d_opt) / (safe * safe), 0.0)
        disp[start : start + _BLOCK] += (diff * factor[..., None]).sum(axis=1)

    if edges.shape[0]:
        u = edges[:, 0]
        v = edges[:, 1]
        diff = pos[u] - pos[v]
        dist = np.hypot(diff[:, 0], diff[:, 1])
        # direction * d^2 / d_opt  ==  diff * d / d_opt
        pull = diff * np.where(dist > 0.0, dist / d_opt, 0.0)[:, None]
        np.subtract.at(disp, u, pull)
        np.add.at(disp, v, pull)

    mag = np.hypot(disp[:, 0], disp[:, 1])
    scale = np.where(mag > temp, temp / np.where(mag > 0.0, mag, 1.0), 1.0)
    pos += disp * scale[:, None]
