"""Seeded synthetic graphs.

All randomness comes from :class:`random.Random` (Mersenne Twister MT19937)
seeded with the caller's integer seed, so a generator call is a pure
function of its arguments.
"""

from __future__ import annotations

import random
from collections import deque

from .graph_core import Graph, GraphError, from_edges, largest_biconnected_component

PRNG = "python-random-mt19937"


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_path(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_clique(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_star(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def _grid_edges(rows: int, cols: int) -> list[tuple[int, int]]:
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return edges


def gen_grid(rows: int, cols: int) -> Graph:
    """4-neighbour lattice; vertex ``r * cols + c`` sits at row r, column c."""
    if min(rows, cols) < 2:
        raise GraphError("grid sides must be >= 2")
    return from_edges(rows * cols, _grid_edges(rows, cols))


def gen_grid_perturbed(side: int, fraction: float, seed: int) -> Graph:
    """``(side+1) x (side+1)`` grid with a ``fraction`` of its edges deleted.

    Edges are visited in a seeded random order and deleted unless that would
    disconnect the graph, until the target count is reached or the edges run
    out. The largest biconnected component of the result is returned.
    """
    if side < 2:
        raise GraphError("side must be >= 2")
    if not 0 <= fraction < 1:
        raise ValueError("deletion fraction must be in [0, 1)")
    k = side + 1
    edges = _grid_edges(k, k)
    target = round(fraction * len(edges))
    rng = random.Random(seed)
    order = edges[:]
    rng.shuffle(order)
    nbrs = [set() for _ in range(k * k)]
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    deleted = 0
    for u, v in order:
        if deleted >= target:
            break
        nbrs[u].discard(v)
        nbrs[v].discard(u)
        if _reachable(nbrs, u, v):
            deleted += 1
        else:
            nbrs[u].add(v)
            nbrs[v].add(u)
    g = from_edges(k * k, [(u, v) for u in range(k * k) for v in nbrs[u] if u < v])
    if deleted == 0:
        return g
    block, _ = largest_biconnected_component(g)
    return block


def _reachable(nbrs: list[set[int]], s: int, t: int) -> bool:
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if w == t:
                return True
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return False


def gen_tree(n: int, seed: int) -> Graph:
    """Random recursive tree: vertex i attaches to a uniform earlier vertex."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    rng = random.Random(seed)
    return from_edges(n, [(i, rng.randrange(i)) for i in range(1, n)])


def gen_random_connected(n: int, p: float, seed: int, max_tries: int = 1000) -> Graph:
    """G(n, p) resampled until connected."""
    if n < 2:
        raise GraphError("random graph needs n >= 2")
    if not 0 < p <= 1:
        raise ValueError("edge probability must be in (0, 1]")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        g = from_edges(n, edges)
        if g.is_connected():
            return g
    raise GraphError(f"no connected G({n}, {p}) after {max_tries} tries")


def generate(kind: str, **params) -> Graph:
    """Dispatch by kind name; used by the CLI."""
    table = {
        "cycle": lambda: gen_cycle(params["n"]),
        "path": lambda: gen_path(params["n"]),
        "clique": lambda: gen_clique(params["n"]),
        "grid": lambda: gen_grid(params["rows"], params["cols"]),
        "grid_perturbed": lambda: gen_grid_perturbed(params["side"], params["fraction"], params["seed"]),
        "tree": lambda: gen_tree(params["n"], params["seed"]),
        "random_connected": lambda: gen_random_connected(params["n"], params["p"], params["seed"]),
    }
    if kind not in table:
        raise ValueError(f"unknown generator {kind!r}")
    return table[kind]()
