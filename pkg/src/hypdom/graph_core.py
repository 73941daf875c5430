"""Undirected simple graphs, edge-list parsing, blocks and BFS primitives."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TextIO

log = logging.getLogger(__name__)


class GraphError(ValueError):
    """Raised for structurally invalid graphs (empty, disconnected, too small)."""


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    """Immutable adjacency-list graph over vertex ids ``0..n-1``.

    ``labels[v]`` is the id the vertex carried in the original input, so
    results computed on relabelled subgraphs can be reported in input ids.
    """

    adj: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...] = field(default=())
    m: int = 0

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.adj))))
        if not self.m:
            object.__setattr__(self, "m", sum(len(a) for a in self.adj) // 2)

    @property
    def n(self) -> int:
        return len(self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> Iterable[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield u, v

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        return all(d >= 0 for d in bfs_distances(self, 0))


def from_edges(n: int, edges: Iterable[tuple[int, int]],
               labels: Sequence[int] | None = None) -> Graph:
    """Build a graph on ``n`` vertices; loops and duplicate edges are dropped."""
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adj = tuple(tuple(sorted(s)) for s in nbrs)
    return Graph(adj, tuple(labels) if labels is not None else ())


def induced_subgraph(graph: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``vertices``, relabelled densely in ascending id order."""
    old = sorted(set(vertices))
    new_id = {v: i for i, v in enumerate(old)}
    edges = [(new_id[u], new_id[w]) for u in old for w in graph.adj[u]
             if w in new_id and u < w]
    labels = [graph.labels[v] for v in old]
    return from_edges(len(old), edges, labels), old


def load_edge_list(stream: TextIO, format: str = "edgelist") -> Graph:
    """Parse a whitespace-separated edge list.

    Lines starting with ``#``, ``%`` or ``c`` are comments. With
    ``format="dimacs"`` the ``p`` header is skipped and ``e u v`` lines are
    read as edges. Vertex ids are densified in order of first appearance;
    the returned graph's ``labels`` hold the original ids.
    """
    if format not in ("edgelist", "dimacs"):
        raise ParseError(f"unknown format {format!r}")
    ids: dict[int, int] = {}
    edges: list[tuple[int, int]] = []
    raw = 0
    for lineno, line in enumerate(stream, 1):
        tok = line.split()
        if not tok or tok[0][0] in "#%c":
            continue
        if format == "dimacs":
            if tok[0] == "p":
                continue
            if tok[0] == "e":
                tok = tok[1:]
        if len(tok) < 2:
            raise ParseError(f"expected two vertex ids, got {line.strip()!r}", lineno)
        try:
            a, b = int(tok[0]), int(tok[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line.strip()!r}", lineno) from None
        if a < 0 or b < 0:
            raise ParseError("negative vertex id", lineno)
        raw += 1
        for x in (a, b):
            if x not in ids:
                ids[x] = len(ids)
        edges.append((ids[a], ids[b]))
    if not ids:
        raise ParseError("empty graph")
    g = from_edges(len(ids), edges, list(ids))
    if raw != g.m:
        log.info("dropped %d duplicate edges or self-loops", raw - g.m)
    return g


def write_edge_list(graph: Graph, stream: TextIO, original_ids: bool = False) -> None:
    lab = graph.labels if original_ids else range(graph.n)
    for u, v in graph.edges():
        stream.write(f"{lab[u]} {lab[v]}\n")


def bfs_distances(graph: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; unreachable vertices get -1."""
    dist = [-1] * graph.n
    dist[source] = 0
    adj = graph.adj
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def truncated_bfs(graph: Graph, source: int, radius: int) -> dict[int, int]:
    """Vertices within ``radius`` hops of ``source`` mapped to their distance."""
    seen = {source: 0}
    frontier = [source]
    adj = graph.adj
    for d in range(1, radius + 1):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in seen:
                    seen[w] = d
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return seen


def truncated_multi_source_bfs(graph: Graph, sources: Iterable[int], radius: int,
                               member: Callable[[int], bool] | None = None
                               ) -> dict[int, tuple[int, int]]:
    """Distance to, and identity of, the nearest source for every vertex
    within ``radius`` of the sources.

    Ties go to the smallest source id: sources are enqueued in ascending
    order, which keeps each BFS layer sorted by owner. ``member`` filters
    which vertices are reported; the search itself runs over the whole graph.
    """
    srcs = sorted(set(sources))
    if not srcs:
        raise ValueError("sources must be nonempty")
    owner = {s: s for s in srcs}
    dist = {s: 0 for s in srcs}
    frontier = srcs
    adj = graph.adj
    for d in range(1, radius + 1):
        nxt = []
        for u in frontier:
            o = owner[u]
            for w in adj[u]:
                if w not in dist:
                    dist[w] = d
                    owner[w] = o
                    nxt.append(w)
        if not nxt:
            break
        frontier = nxt
    return {v: (dist[v], owner[v]) for v in dist if member is None or member(v)}


def graph_summary(graph: Graph) -> dict:
    degs = [len(a) for a in graph.adj]
    return {
        "n": graph.n,
        "m": graph.m,
        "min_degree": min(degs),
        "mean_degree": 2 * graph.m / graph.n,
        "max_degree": max(degs),
    }


degree_stats = graph_summary


def biconnected_components(graph: Graph) -> list[list[int]]:
    """Vertex sets of all blocks (iterative Hopcroft-Tarjan).

    Isolated vertices yield no block. Each bridge is its own two-vertex block.
    """
    n = graph.n
    adj = graph.adj
    disc = [-1] * n
    low = [0] * n
    blocks: list[list[int]] = []
    t = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = t
        t += 1
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            for w in it:
                if disc[w] < 0:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, u, iter(adj[w])))
                    break
                if w != parent and disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            else:
                stack.pop()
                if parent < 0:
                    continue
                if low[u] < low[parent]:
                    low[parent] = low[u]
                if low[u] >= disc[parent]:
                    block = set()
                    while True:
                        a, b = edge_stack.pop()
                        block.add(a)
                        block.add(b)
                        if (a, b) == (parent, u):
                            break
                    blocks.append(sorted(block))
    return blocks


def largest_biconnected_component(graph: Graph) -> tuple[Graph, list[int]]:
    """Largest block by vertex count, then edge count, then smallest member id.

    Returns the relabelled block and, for each new id, its id in ``graph``.
    """
    if graph.n < 2:
        raise GraphError("need at least two vertices")
    best = None
    best_key = None
    for block in biconnected_components(graph):
        members = set(block)
        m = sum(1 for u in block for w in graph.adj[u] if w in members) // 2
        key = (-len(block), -m, block[0])
        if best_key is None or key < best_key:
            best, best_key = block, key
    if best is None:
        raise GraphError("graph has no edges")
    return induced_subgraph(graph, best)


def check_symmetric(graph: Graph) -> bool:
    """Full scan: adjacency is symmetric, loop-free and duplicate-free."""
    sets = [set(a) for a in graph.adj]
    for u, nbrs in enumerate(graph.adj):
        if len(sets[u]) != len(nbrs) or u in sets[u]:
            return False
        if any(u not in sets[w] for w in nbrs):
            return False
    return True
