import copy
import math

import numpy as np
import pytest

from hypdom.domination import (ParameterError, derive_sequence, hierarchical_dominating_set,
                               hierarchy_check)
from hypdom.engine import all_pairs_distances, brute_force_hyperbolicity
from hypdom.generators import gen_cycle, gen_grid_perturbed, gen_star

from _corpus import medium_graph, small_graph


def test_sequence_examples():
    assert derive_sequence(8, 1.5) == (8, 5, 3, 2, 1, 0)
    assert derive_sequence(0, 3.0) == (0,)
    assert derive_sequence(8, 1.01) == (8, 7, 6, 5, 4, 3, 2, 1, 0)
    assert derive_sequence(10, 3) == (10, 3, 1, 0)
    # 0.1 steps are exact: 3 / 1.5 is 2, not 1.999...
    assert derive_sequence(3, 1.5) == (3, 2, 1, 0)


@pytest.mark.parametrize("k,r", [(2, 1.0), (2, 0.5), (-1, 2.0), (1.5, 2.0)])
def test_sequence_rejects(k, r):
    with pytest.raises(ParameterError):
        derive_sequence(k, r)


def test_ratio_message():
    with pytest.raises(ParameterError, match="ratio must exceed 1"):
        derive_sequence(2, 1.0)


def test_star():
    h = hierarchical_dominating_set(gen_star(6), (1, 0))
    top = h.top
    assert top.dominators == [0] and top.radius == {0: 1}
    assert top.cell(0) == list(range(7))
    assert top.children[0] == list(range(7))


def test_cycle8():
    # greedy picks 0 (covers 6,7,0,1,2), then 3 (lowest uncovered id); vertex 2 is
    # one step from 3 and two from 0, so the closest-dominator pass moves it to 3
    h = hierarchical_dominating_set(gen_cycle(8), (2, 0))
    top = h.top
    assert top.dominators == [0, 3]
    assert top.cell(0) == [0, 1, 6, 7]
    assert top.cell(3) == [2, 3, 4, 5]
    assert top.radius == {0: 2, 3: 2}
    assert h.sequence == (2, 0)


def test_single_level():
    h = hierarchical_dominating_set(gen_cycle(5), (0,))
    assert len(h.levels) == 1
    assert h.top.dominators == list(range(5))
    assert set(h.top.radius.values()) == {0}


def test_bad_sequences():
    for seq in [(2, 1), (2, 2, 0), (), (1, 2, 0)]:
        with pytest.raises(ParameterError):
            hierarchical_dominating_set(gen_cycle(5), seq)


def test_summary_shape():
    h = hierarchical_dominating_set(gen_grid_perturbed(10, 0.1, 1), derive_sequence(4, 2))
    s = h.summary()
    assert [d["k"] for d in s] == [4, 2, 1, 0]
    assert s[-1]["dominators"] == h.levels[0].k + len(h.levels[0].dominators)
    assert all(sum(d["radius_histogram"].values()) == d["dominators"] for d in s)


@pytest.mark.parametrize("seed", range(100))
def test_invariants_on_random_graphs(seed):
    g = medium_graph(seed, n_max=120) if seed % 2 else small_graph(seed)
    k = 1 + seed % 5
    h = hierarchical_dominating_set(g, derive_sequence(k, 1.5 + (seed % 3) / 2))
    assert hierarchy_check(g, h) == []


def test_check_samples_large_graphs():
    g = gen_grid_perturbed(20, 0.1, 2)
    h = hierarchical_dominating_set(g, derive_sequence(3, 2))
    assert hierarchy_check(g, h, exact_limit=10, samples=30) == []


def _hier():
    g = gen_grid_perturbed(10, 0.1, 4)
    return g, hierarchical_dominating_set(g, derive_sequence(2, 2))


def test_fault_vertex_beyond_radius():
    g, h = _hier()
    bad = copy.deepcopy(h)
    top = bad.top
    D = all_pairs_distances(g)
    # move a vertex into the cell of the farthest top dominator
    v = 0
    far = max(top.dominators, key=lambda u: D[u][v])
    assert D[far][v] > top.k
    top.owner[v] = far
    assert any("reaches distance" in p for p in hierarchy_check(g, bad))


def test_fault_overlapping_cells():
    g, h = _hier()
    bad = copy.deepcopy(h)
    # a dominator listed under two parents
    a, b = bad.levels[2].dominators[:2]
    extra = bad.levels[2].children[b][0]
    bad.levels[2].children[a].append(extra)
    assert any("children" in p for p in hierarchy_check(g, bad))
    bad2 = copy.deepcopy(h)
    bad2.levels[1].dominators.append(bad2.levels[1].dominators[0])
    assert any("repeated" in p for p in hierarchy_check(g, bad2))


def test_fault_wrong_radius_and_base():
    g, h = _hier()
    bad = copy.deepcopy(h)
    u = bad.top.dominators[0]
    bad.top.radius[u] += 1
    assert any("radius of" in p for p in hierarchy_check(g, bad))
    bad = copy.deepcopy(h)
    bad.levels[0].radius[0] = 1
    assert any("identity" in p for p in hierarchy_check(g, bad))


def _top_delta(D, top):
    sub = D[np.ix_(top, top)]
    best = 0
    m = len(top)
    for a in range(m):
        s1 = sub[a][:, None, None] + sub[None, :, :]
        s2 = sub[a][None, :, None] + sub[:, None, :]
        s3 = sub[a][None, None, :] + sub[:, :, None]
        hi = np.maximum(np.maximum(s1, s2), s3)
        lo = np.minimum(np.minimum(s1, s2), s3)
        best = max(best, int((2 * hi + lo - s1 - s2 - s3).max()))
    return best


@pytest.mark.parametrize("seed", range(25))
def test_sandwich_against_oracle(seed):
    g = small_graph(seed)
    D = all_pairs_distances(g)
    exact = brute_force_hyperbolicity(g, dist=D).twice
    for k in (1, 2, 3):
        h = hierarchical_dominating_set(g, derive_sequence(k, 2))
        low = _top_delta(D, h.top.dominators)
        assert low <= exact <= low + 8 * k
