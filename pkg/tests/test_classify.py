import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hypdom.domination import derive_sequence, hierarchical_dominating_set
from hypdom.eccentricity import compute_all_eccentricities
from hypdom.engine import (EngineConfig, all_pairs_distances, brute_force_hyperbolicity, classify,
                           compute_acc_val, compute_hyperbolicity, is_acceptable, is_valuable)
from hypdom.generators import gen_random_connected
from hypdom.graph_core import from_edges


def test_radius_zero_distance_condition():
    # low = 0, radii 0: only coincidence with x or y fails condition (1)
    assert not is_acceptable(0, 1, 5, 0, 1, 0, 0, 0)
    assert not is_acceptable(1, 0, 5, 0, 1, 0, 0, 0)
    assert is_acceptable(1, 1, 5, 0, 1, 0, 0, 0)


def test_central_vertex_never_valuable_at_zero_radius():
    # z = c: d(x,y) - d(x,c) - d(y,c) <= 0 by the triangle inequality
    for dxy, dxc, dyc in [(2, 1, 1), (3, 2, 2), (1, 0, 1)]:
        assert not is_valuable(dxc, dyc, 0, 0, dxy, 0, 0, 0)


cand = st.tuples(st.integers(0, 12), st.integers(0, 12), st.integers(0, 14),
                 st.integers(0, 3), st.integers(0, 12))


@given(st.lists(cand, min_size=1, max_size=30), st.integers(0, 12), st.integers(0, 3),
       st.integers(0, 3), st.integers(0, 20), st.booleans())
@settings(max_examples=300, deadline=None)
def test_scalar_vector_agree(rows, dxy, rx, ry, low2, strict):
    dzx, dzy, ecc, rz, dzc = (list(c) for c in zip(*rows))
    acc, val = classify(dzx, dzy, ecc, rz, dzc, dxy, rx, ry, low2, strict)
    A, V = compute_acc_val(*(np.array(c) for c in (dzx, dzy, ecc, rz, dzc)),
                           dxy, rx, ry, low2, strict)
    assert acc == list(np.flatnonzero(A)) and val == list(np.flatnonzero(V))
    for i in range(len(rows)):
        a = is_acceptable(dzx[i], dzy[i], ecc[i], rz[i], dxy, rx, ry, low2, strict)
        assert a == (i in acc)
        assert (a and is_valuable(dzx[i], dzy[i], dzc[i], rz[i], dxy, rx, ry, low2)) == (i in val)


def _completeness(g, k, r):
    D = all_pairs_distances(g)
    ecc = compute_all_eccentricities(g)
    c = ecc.central_vertex
    h = hierarchical_dominating_set(g, derive_sequence(k, r))
    n = g.n
    bad = 0
    for lv in h.levels:
        own = lv.owner
        rad = lv.radius
        for q in itertools.product(range(n), repeat=4):
            up, vp, xp, yp = q
            t2 = int(D[up][vp] + D[xp][yp] - max(D[up][xp] + D[vp][yp], D[up][yp] + D[vp][xp]))
            if t2 <= 0:
                continue
            u, v, x, y = (own[w] for w in q)
            dxy = int(D[x][y])
            for low2 in range(0, t2):
                flags = []
                for z in (u, v):
                    acc = is_acceptable(int(D[z][x]), int(D[z][y]), ecc.ecc[z], rad[z], dxy,
                                        rad[x], rad[y], low2)
                    val = acc and is_valuable(int(D[z][x]), int(D[z][y]), int(D[z][c]), rad[z],
                                              dxy, rad[x], rad[y], low2)
                    flags.append((acc, val))
                if not (flags[0][0] and flags[1][0] and (flags[0][1] or flags[1][1])):
                    bad += 1
    return bad


@pytest.mark.parametrize("seed", range(12))
def test_improving_quadruples_survive_classification(seed):
    g = gen_random_connected(8 + seed % 6, 0.25 + 0.05 * (seed % 4), seed)
    for k in (0, 1, 2):
        assert _completeness(g, k, 2) == 0


# seeded graph where the strict thresholds drop the only improving quadruple
STRICT_CASE = [(0, 1), (0, 3), (0, 4), (0, 5), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]


def test_strict_thresholds_can_lose_the_answer():
    g = from_edges(6, STRICT_CASE)
    assert brute_force_hyperbolicity(g).twice == 2
    assert compute_hyperbolicity(g, 0, 1.5).twice == 2
    assert compute_hyperbolicity(g, 0, 1.5, EngineConfig(strict_thresholds=True)).twice == 1
