"""Brute-force four-point oracle over all quadruples."""

from __future__ import annotations

import numpy as np

from ..graph_core import Graph, GraphError, bfs_distances
from .quad import QuadrupleResult

DEFAULT_LIMIT = 600


def all_pairs_distances(graph: Graph) -> np.ndarray:
    dist = np.array([bfs_distances(graph, v) for v in range(graph.n)], dtype=np.int64)
    if (dist < 0).any():
        raise GraphError("graph is disconnected")
    return dist


def brute_force_hyperbolicity(graph: Graph, limit: int = DEFAULT_LIMIT,
                              dist: np.ndarray | None = None) -> QuadrupleResult:
    """Max of twice delta(u, v, x, y) over all quadruples, with a witness.

    Vectorised over (v, x, y) for each u, in chunks of v to bound memory.
    """
    n = graph.n
    if n > limit:
        raise GraphError(f"brute force limited to n <= {limit}, got {n}")
    D = all_pairs_distances(graph) if dist is None else dist
    best = 0
    witness = tuple(min(i, n - 1) for i in range(4))
    chunk = max(1, 4_000_000 // max(1, n * n))
    for u in range(n):
        du = D[u]
        for v0 in range(u, n, chunk):
            vs = np.arange(v0, min(n, v0 + chunk))
            s1 = du[vs][:, None, None] + D[None, :, :]
            s2 = du[None, :, None] + D[vs][:, None, :]
            s3 = du[None, None, :] + D[vs][:, :, None]
            hi = np.maximum(np.maximum(s1, s2), s3)
            lo = np.minimum(np.minimum(s1, s2), s3)
            gap = 2 * hi + lo - s1 - s2 - s3
            m = int(gap.max())
            if m > best:
                best = m
                iv, ix, iy = np.unravel_index(int(gap.argmax()), gap.shape)
                witness = (u, int(vs[iv]), int(ix), int(iy))
    return QuadrupleResult(best, witness)
