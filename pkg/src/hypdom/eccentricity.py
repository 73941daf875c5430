"""Exact eccentricities via lower/upper bound refinement.

Each BFS from a vertex ``v`` tightens, for every other vertex ``w``,

    max(d(v, w), ecc(v) - d(v, w)) <= ecc(w) <= ecc(v) + d(v, w)

and a vertex is settled as soon as its two bounds meet. BFS sources
alternate between the unsettled vertex with the largest upper bound and
the one with the smallest lower bound.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import Graph, GraphError, bfs_distances


@dataclass(frozen=True)
class EccentricityTable:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    central_vertex: int
    bfs_runs: int = 0

    @property
    def mean(self) -> float:
        return sum(self.ecc) / len(self.ecc)


def compute_all_eccentricities(graph: Graph) -> EccentricityTable:
    n = graph.n
    if n == 0:
        raise GraphError("empty graph")
    lo = np.zeros(n, dtype=np.int64)
    hi = np.full(n, np.iinfo(np.int64).max // 4, dtype=np.int64)
    ecc = np.full(n, -1, dtype=np.int64)
    open_ = np.ones(n, dtype=bool)
    runs = 0
    pick_high = True
    while open_.any():
        cand = np.flatnonzero(open_)
        if pick_high:
            v = int(cand[np.argmax(hi[cand])])
        else:
            v = int(cand[np.argmin(lo[cand])])
        pick_high = not pick_high
        dist = np.asarray(bfs_distances(graph, v), dtype=np.int64)
        if (dist < 0).any():
            raise GraphError("graph is disconnected")
        runs += 1
        e = int(dist.max())
        ecc[v] = e
        open_[v] = False
        lo = np.maximum(lo, np.maximum(dist, e - dist))
        hi = np.minimum(hi, e + dist)
        done = open_ & (lo == hi)
        ecc[done] = lo[done]
        open_ &= ~done
    values = tuple(int(x) for x in ecc)
    return EccentricityTable(values, min(values), max(values),
                             pick_central_vertex_from(values), runs)


def pick_central_vertex_from(ecc) -> int:
    best = min(ecc)
    return next(v for v, e in enumerate(ecc) if e == best)


def pick_central_vertex(table: EccentricityTable) -> int:
    """Minimum-eccentricity vertex, smallest id on ties."""
    return pick_central_vertex_from(table.ecc)


def eccentricities_by_bfs(graph: Graph) -> list[int]:
    """One BFS per vertex; slow reference used for cross-checks."""
    return [max(bfs_distances(graph, v)) for v in range(graph.n)]
