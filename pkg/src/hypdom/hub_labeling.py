"""2-hop hub labels built by pruned BFS (pruned landmark labeling).

Hubs are processed in a fixed order. The BFS from hub ``h`` stops expanding
at any vertex whose distance to ``h`` is already certified by the labels
built so far, so later hubs only land in the labels that still need them.
"""

from __future__ import annotations

import random
from collections import deque
from operator import add
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

from .graph_core import Graph

INF = 1 << 60


def degree_order(graph: Graph, seed: int = 0) -> list[int]:
    """Degree descending; ties in a fixed shuffled order.

    Breaking ties by id lines hubs up along paths and grid rows, which
    makes labels grow linearly there; a shuffled tie-break keeps them short.
    """
    rank = list(range(graph.n))
    random.Random(seed).shuffle(rank)
    return sorted(range(graph.n), key=lambda v: (-graph.degree(v), rank[v]))


ORDERINGS = {
    "degree": degree_order,
    "id": lambda g: list(range(g.n)),
}


@dataclass
class HubLabels:
    """Per-vertex labels sorted by hub id: ``hubs[v][i]`` at ``dists[v][i]``."""

    hubs: list[tuple[int, ...]]
    dists: list[tuple[int, ...]]
    order: list[int]
    queries: int = 0

    @property
    def n(self) -> int:
        return len(self.hubs)

    def query(self, u: int, v: int) -> int:
        """Exact distance by merging the two sorted labels."""
        self.queries += 1
        hu, du = self.hubs[u], self.dists[u]
        hv, dv = self.hubs[v], self.dists[v]
        i = j = 0
        nu, nv = len(hu), len(hv)
        best = INF
        while i < nu and j < nv:
            a, b = hu[i], hv[j]
            if a == b:
                s = du[i] + dv[j]
                if s < best:
                    best = s
                i += 1
                j += 1
            elif a < b:
                i += 1
            else:
                j += 1
        return best

    def distances_from(self, u: int, targets: Sequence[int], scratch: list[int] | None = None) -> list[int]:
        """``[d(u, t) for t in targets]`` using one dense scatter of u's label."""
        self.queries += len(targets)
        tmp = scratch if scratch is not None else [INF] * self.n
        for h, d in zip(self.hubs[u], self.dists[u]):
            tmp[h] = d
        out = []
        get = tmp.__getitem__
        for t in targets:
            out.append(min(map(add, map(get, self.hubs[t]), self.dists[t])))
        for h in self.hubs[u]:
            tmp[h] = INF
        return out


def build_hub_labels(graph: Graph, ordering: str | Sequence[int] = "degree") -> HubLabels:
    n = graph.n
    order = ORDERINGS[ordering](graph) if isinstance(ordering, str) else list(ordering)
    if sorted(order) != list(range(n)):
        raise ValueError("ordering must be a permutation of the vertices")
    # built in rank order; re-sorted by hub id at the end
    lab_h: list[list[int]] = [[] for _ in range(n)]
    lab_d: list[list[int]] = [[] for _ in range(n)]
    tmp = [INF] * n
    dist = [-1] * n
    adj = graph.adj
    for h in order:
        for w, d in zip(lab_h[h], lab_d[h]):
            tmp[w] = d
        dist[h] = 0
        visited = [h]
        queue = deque([h])
        while queue:
            v = queue.popleft()
            dv = dist[v]
            lh = lab_h[v]
            if lh and min(map(add, map(tmp.__getitem__, lh), lab_d[v])) <= dv:
                continue
            lab_h[v].append(h)
            lab_d[v].append(dv)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    visited.append(w)
                    queue.append(w)
        for v in visited:
            dist[v] = -1
        for w in lab_h[h]:
            tmp[w] = INF
    hubs, dists = [], []
    for v in range(n):
        pairs = sorted(zip(lab_h[v], lab_d[v]))
        hubs.append(tuple(p[0] for p in pairs))
        dists.append(tuple(p[1] for p in pairs))
    return HubLabels(hubs, dists, order)


def query_distance(labels: HubLabels, u: int, v: int) -> int:
    return labels.query(u, v)


def label_stats(labels: HubLabels) -> dict:
    sizes = [len(h) for h in labels.hubs]
    total = sum(sizes)
    return {
        "total_entries": total,
        "mean_size": total / len(sizes) if sizes else 0.0,
        "max_size": max(sizes, default=0),
    }


def dump_labels(labels: HubLabels, stream: TextIO) -> None:
    """One line per vertex: ``v: (h1,d1) (h2,d2) ...``."""
    for v in range(labels.n):
        body = " ".join(f"({h},{d})" for h, d in zip(labels.hubs[v], labels.dists[v]))
        stream.write(f"{v}: {body}\n")


def load_labels(stream: Iterable[str]) -> HubLabels:
    rows: dict[int, list[tuple[int, int]]] = {}
    for line in stream:
        line = line.strip()
        if not line:
            continue
        head, _, body = line.partition(":")
        pairs = []
        for tok in body.split():
            h, d = tok.strip("()").split(",")
            pairs.append((int(h), int(d)))
        rows[int(head)] = sorted(pairs)
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise ValueError("label dump must list every vertex 0..n-1 exactly once")
    return HubLabels([tuple(h for h, _ in rows[v]) for v in range(n)],
                     [tuple(d for _, d in rows[v]) for v in range(n)],
                     [])
