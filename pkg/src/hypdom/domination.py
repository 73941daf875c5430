"""Hierarchies of nested distance-k dominating sets.

Level ``j`` partitions the vertices into cells, one per dominator in
``D_j``; each vertex belongs to the cell of its closest level-j dominator.
Level ``j-1`` re-dominates every level-j cell at the smaller radius using
members of that cell only, so the cells nest. Level 0 has every vertex as
its own dominator.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .graph_core import Graph, bfs_distances, truncated_bfs, truncated_multi_source_bfs


class ParameterError(ValueError):
    pass


def derive_sequence(k: int, r: float) -> tuple[int, ...]:
    """Domination radii ``k = k_i > ... > k_0 = 0`` with ``k_{j-1} = floor(k_j / r)``.

    A step that would not decrease (r close to 1) is clamped to ``k_j - 1``.
    """
    if int(k) != k or k < 0:
        raise ParameterError("max domination distance must be a non-negative integer")
    ratio = Fraction(str(r)) if isinstance(r, float) else Fraction(r)
    if ratio <= 1:
        raise ParameterError("ratio must exceed 1")
    seq = [int(k)]
    while seq[-1] > 0:
        cur = seq[-1]
        seq.append(min(math.floor(cur / ratio), cur - 1))
    return tuple(seq)


@dataclass
class Level:
    k: int
    dominators: list[int]
    owner: list[int]          # owner[v]: v's dominator at this level
    radius: dict[int, int]    # effective radius per dominator
    children: dict[int, list[int]] = field(default_factory=dict)  # lower-level dominators per cell

    def cell(self, u: int) -> list[int]:
        return [v for v, o in enumerate(self.owner) if o == u]


@dataclass
class DominationHierarchy:
    """``levels[j]`` for ``j = 0..i``; ``levels[-1]`` is the top level."""

    levels: list[Level]

    @property
    def top(self) -> Level:
        return self.levels[-1]

    @property
    def sequence(self) -> tuple[int, ...]:
        return tuple(lv.k for lv in reversed(self.levels))

    def summary(self) -> list[dict]:
        out = []
        for j in range(len(self.levels) - 1, -1, -1):
            lv = self.levels[j]
            hist = Counter(lv.radius.values())
            out.append({
                "level": j,
                "k": lv.k,
                "dominators": len(lv.dominators),
                "radius_histogram": {str(r): hist[r] for r in sorted(hist)},
            })
        return out


def _greedy(graph: Graph, candidates: list[int], k: int, in_scope) -> list[int]:
    """Scan candidates by degree (desc) then id; keep those not yet k-dominated."""
    order = sorted(candidates, key=lambda v: (-graph.degree(v), v))
    dominated = set()
    chosen = []
    for v in order:
        if v in dominated:
            continue
        chosen.append(v)
        dominated.update(w for w in truncated_bfs(graph, v, k) if in_scope(w))
    return chosen


def _assign(graph: Graph, members: list[int], dominators: list[int], k: int,
            in_scope, owner: list[int], radius: dict[int, int]) -> None:
    reach = truncated_multi_source_bfs(graph, dominators, k, in_scope)
    for u in dominators:
        radius[u] = 0
    for v in members:
        d, u = reach[v]
        owner[v] = u
        if d > radius[u]:
            radius[u] = d


def hierarchical_dominating_set(graph: Graph, sequence) -> DominationHierarchy:
    seq = tuple(sequence)
    if not seq or seq[-1] != 0 or any(a <= b for a, b in zip(seq, seq[1:])):
        raise ParameterError("sequence must be strictly decreasing and end with 0")
    n = graph.n
    everyone = list(range(n))
    levels_top_down: list[Level] = []

    k = seq[0]
    if k == 0:
        return DominationHierarchy([_identity_level(n)])
    owner = [-1] * n
    radius: dict[int, int] = {}
    top = _greedy(graph, everyone, k, lambda w: True)
    _assign(graph, everyone, top, k, None, owner, radius)
    levels_top_down.append(Level(k, sorted(top), owner, radius))

    for k in seq[1:]:
        parent = levels_top_down[-1]
        if k == 0:
            lv = _identity_level(n)
            for u in parent.dominators:
                parent.children[u] = []
            for v in range(n):
                parent.children[parent.owner[v]].append(v)
            levels_top_down.append(lv)
            break
        cells: dict[int, list[int]] = {u: [] for u in parent.dominators}
        for v in range(n):
            cells[parent.owner[v]].append(v)
        owner = [-1] * n
        radius = {}
        doms_all = []
        for u in parent.dominators:
            members = cells[u]
            mset = set(members)
            doms = _greedy(graph, members, k, mset.__contains__)
            _assign(graph, members, doms, k, mset.__contains__, owner, radius)
            parent.children[u] = sorted(doms)
            doms_all.extend(doms)
        levels_top_down.append(Level(k, sorted(doms_all), owner, radius))
    return DominationHierarchy(list(reversed(levels_top_down)))


def _identity_level(n: int) -> Level:
    return Level(0, list(range(n)), list(range(n)), {v: 0 for v in range(n)})


def hierarchy_check(graph: Graph, hier: DominationHierarchy, exact_limit: int = 400,
                    samples: int = 200, seed: int = 0) -> list[str]:
    """Return violations of the partition, radius, nesting and base-level
    invariants (empty list when the hierarchy is sound).

    Radii are checked against full BFS from every dominator when
    ``n <= exact_limit``, otherwise against a sample of dominators.
    """
    n = graph.n
    problems: list[str] = []
    rng = random.Random(seed)
    base = hier.levels[0]
    if base.k != 0 or sorted(base.dominators) != list(range(n)) \
            or any(base.radius.get(v) != 0 for v in range(n)):
        problems.append("level 0 is not the identity partition")
    for j, lv in enumerate(hier.levels):
        if len(lv.owner) != n:
            problems.append(f"level {j}: owner table has wrong length")
            continue
        doms = set(lv.dominators)
        if len(doms) != len(lv.dominators):
            problems.append(f"level {j}: repeated dominator")
        for v, o in enumerate(lv.owner):
            if o not in doms:
                problems.append(f"level {j}: vertex {v} assigned to non-dominator {o}")
        for u in doms:
            if lv.owner[u] != u:
                problems.append(f"level {j}: dominator {u} not in its own cell")
        check = sorted(doms) if n <= exact_limit else rng.sample(sorted(doms), min(samples, len(doms)))
        cells: dict[int, list[int]] = {}
        for v, o in enumerate(lv.owner):
            cells.setdefault(o, []).append(v)
        for u in check:
            dist = bfs_distances(graph, u)
            far = max(dist[v] for v in cells.get(u, [u]))
            if far > lv.k:
                problems.append(f"level {j}: cell of {u} reaches distance {far} > k={lv.k}")
            if lv.radius.get(u) != far:
                problems.append(f"level {j}: radius of {u} is {lv.radius.get(u)}, true max {far}")
        if j + 1 < len(hier.levels):
            up = hier.levels[j + 1]
            for v in range(n):
                if up.owner[lv.owner[v]] != up.owner[v]:
                    problems.append(f"level {j}: dominator of {v} lies outside its level-{j + 1} cell")
            kids: dict[int, list[int]] = {u: [] for u in up.dominators}
            for w in lv.dominators:
                kids.setdefault(up.owner[w], []).append(w)
            for u in up.dominators:
                if sorted(up.children.get(u, [])) != sorted(kids[u]):
                    problems.append(f"level {j + 1}: children of {u} disagree with the partition")
    return problems
