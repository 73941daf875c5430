"""Sampled checks of the domination bounds the search relies on.

Each check draws random quadruples ``(u', v', x', y')``, looks up their
dominators ``(u, v, x, y)`` at some level of a hierarchy, and evaluates the
inequalities directly from all-pairs BFS distances in exact rational
arithmetic. The formulas here are written out independently of
:mod:`hypdom.engine.classify`.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from ..domination import DominationHierarchy
from ..eccentricity import compute_all_eccentricities
from ..graph_core import Graph
from .oracle import all_pairs_distances

HALF = Fraction(1, 2)


def _delta(D, a, b, c, d) -> Fraction:
    s = sorted((D[a][b] + D[c][d], D[a][c] + D[b][d], D[a][d] + D[b][c]))
    return Fraction(int(s[2] - s[1]), 2)


def _tau(D, u, v, x, y) -> Fraction:
    return Fraction(int(D[u][v] + D[x][y] - max(D[x][u] + D[y][v], D[x][v] + D[y][u])), 2)


def _levels(hier: DominationHierarchy, level: int | None) -> list[int]:
    return list(range(len(hier.levels))) if level is None else [level]


def lemma_sandwich_check(graph: Graph, hier: DominationHierarchy, samples: int = 10_000,
                         seed: int = 0, level: int | None = None,
                         dist: np.ndarray | None = None) -> list[str]:
    """``delta(dom) - K4 <= delta(q) <= delta(dom) + K4`` on sampled quadruples."""
    D = all_pairs_distances(graph) if dist is None else dist
    rng = random.Random(seed)
    n = graph.n
    levels = _levels(hier, level)
    bad: list[str] = []
    for _ in range(samples):
        q = [rng.randrange(n) for _ in range(4)]
        lv = hier.levels[rng.choice(levels)]
        dom = [lv.owner[w] for w in q]
        k4 = sum(lv.radius[w] for w in dom)
        dq = _delta(D, *q)
        dd = _delta(D, *dom)
        if not dd - k4 <= dq <= dd + k4:
            bad.append(f"k={lv.k} q={q} dom={dom}: delta {dq} vs {dd} +- {k4}")
    return bad


def bound_lemmas_check(graph: Graph, hier: DominationHierarchy, samples: int = 10_000,
                       seed: int = 0, level: int | None = None, center: int | None = None,
                       dist: np.ndarray | None = None, ecc=None) -> list[str]:
    """Shape bounds, both cut lemmas and the central-vertex bound on samples.

    For the cut lemmas the lower bound is set to ``tau(q) - 1/2``, the largest
    value the quadruple still beats; the hypotheses of the lemmas must then
    fail for both ``u`` and ``v``.
    """
    D = all_pairs_distances(graph) if dist is None else dist
    if ecc is None:
        table = compute_all_eccentricities(graph)
        ecc = table.ecc
        if center is None:
            center = table.central_vertex
    elif center is None:
        center = int(np.argmin(ecc))
    rng = random.Random(seed)
    n = graph.n
    levels = _levels(hier, level)
    bad: list[str] = []
    for _ in range(samples):
        q = [rng.randrange(n) for _ in range(4)]
        lv = hier.levels[rng.choice(levels)]
        dom = [lv.owner[w] for w in q]
        kr = [lv.radius[w] for w in dom]
        up, vp, xp, yp = q
        u, v, x, y = dom
        ku, kv, kx, ky = kr
        where = f"k={lv.k} q={q} dom={dom}"

        dq = _delta(D, *q)
        shape = min(kr[a] + kr[b] + int(D[dom[a]][dom[b]]) for a in range(4) for b in range(a + 1, 4))
        if dq > shape:
            bad.append(f"{where}: delta {dq} exceeds pair bound {shape}")

        tq = _tau(D, *q)
        if 2 * tq > min(ku + kv + D[u][v], kx + ky + D[x][y]):
            bad.append(f"{where}: 2 tau {2 * tq} exceeds pair-sum bound")

        f2 = [int(D[x][y] - D[x][z] - D[y][z] + 2 * D[z][center]) + 4 * kz + 2 * kx + 2 * ky
              for z, kz in ((u, ku), (v, kv))]
        if 4 * tq > f2[0] + f2[1]:
            bad.append(f"{where}: 2 tau {2 * tq} exceeds f_c(u) + f_c(v) = {Fraction(f2[0] + f2[1], 2)}")

        if tq < HALF:
            continue
        low = tq - HALF
        for z, kz in ((u, ku), (v, kv)):
            dzx, dzy, dxy = int(D[z][x]), int(D[z][y]), int(D[x][y])
            if not (dzx + kz + kx > low and dzy + kz + ky > low):
                bad.append(f"{where}: {z} fails the distance condition at delta_L={low}")
            k8 = 4 * kz + 2 * kx + 2 * ky
            if 2 * ecc[z] + dxy - dzx - dzy + k8 <= 4 * low + 1:
                bad.append(f"{where}: {z} meets the eccentricity cut at delta_L={low}")
            k4 = 2 * kz + kx + ky
            if ecc[z] + dxy - 3 * low - 1 + k4 <= max(dzx - kx, dzy - ky):
                bad.append(f"{where}: {z} meets the three-point cut at delta_L={low}")
        if 2 * max(Fraction(f2[0], 2), Fraction(f2[1], 2)) <= 2 * low:
            bad.append(f"{where}: neither u nor v valuable at delta_L={low}")
    return bad
