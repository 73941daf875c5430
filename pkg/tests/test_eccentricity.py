import pytest

from hypdom.eccentricity import (compute_all_eccentricities, eccentricities_by_bfs,
                                 pick_central_vertex, pick_central_vertex_from)
from hypdom.generators import gen_cycle, gen_grid_perturbed, gen_path, gen_star, gen_tree
from hypdom.graph_core import GraphError, from_edges

from _corpus import medium_graph


def test_path():
    t = compute_all_eccentricities(gen_path(5))
    assert list(t.ecc) == [4, 3, 2, 3, 4]
    assert (t.radius, t.diameter, t.central_vertex) == (2, 4, 2)
    assert pick_central_vertex(t) == 2


def test_cycle_and_star():
    t = compute_all_eccentricities(gen_cycle(8))
    assert set(t.ecc) == {4} and t.central_vertex == 0 and t.mean == 4.0
    assert pick_central_vertex(compute_all_eccentricities(gen_star(4))) == 0
    assert pick_central_vertex_from([3, 2, 2, 5]) == 1


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        compute_all_eccentricities(from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("seed", range(100))
def test_matches_bfs_oracle(seed):
    g = medium_graph(seed)
    t = compute_all_eccentricities(g)
    ref = eccentricities_by_bfs(g)
    assert list(t.ecc) == ref
    assert t.radius == min(ref) and t.diameter == max(ref)
    assert t.diameter <= 2 * t.radius
    assert t.central_vertex == ref.index(min(ref))


@pytest.mark.parametrize("g", [gen_tree(300, 2), gen_grid_perturbed(15, 0.1, 1), gen_path(60)])
def test_sparse_shapes(g):
    t = compute_all_eccentricities(g)
    assert list(t.ecc) == eccentricities_by_bfs(g)
    assert t.bfs_runs <= g.n
